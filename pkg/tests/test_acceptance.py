"""Acceptance suite: one test per criterion, exact integer expectations.

Each test prints a single pass/fail line; the underlying checks come from
the named verification suites so the CLI `verify` subcommand and this
module can never drift apart.
"""

import time

from anonet.suites import (
    generated_solvable,
    generated_unsolvable,
    random_solvable,
    run_suite,
)

_cache = {}


def suite(name):
    if name not in _cache:
        _cache[name] = run_suite(name)
    return _cache[name]


def _report(criterion, checks):
    bad = [c for c in checks if not c.ok]
    verdict = "PASS" if not bad else "FAIL"
    print(f"criterion {criterion}: {verdict} ({len(checks) - len(bad)}/{len(checks)} checks)")
    for c in bad:
        print("   ", c.line())
    assert not bad, f"criterion {criterion} failed: {[c.name for c in bad]}"


def test_criterion_1_clique_symmetry_levels():
    start = time.monotonic()
    checks = suite("lemma-clique")
    elapsed = time.monotonic() - start
    _report(1, checks)
    assert elapsed < 10 * len(checks), f"{elapsed:.1f}s exceeds the per-check budget"


def test_criterion_2_necklace_twin_depths():
    start = time.monotonic()
    checks = suite("lemma-ring")
    elapsed = time.monotonic() - start
    _report(2, checks)
    assert elapsed < 60, f"{elapsed:.1f}s exceeds the 60s budget"


def test_criterion_3_torus_impossibility():
    start = time.monotonic()
    checks = suite("thm-impossibility")
    elapsed = time.monotonic() - start
    _report(3, checks)
    assert elapsed < 30, f"{elapsed:.1f}s exceeds the 30s budget"


def test_criterion_4_chorded_ring_indistinguishability():
    start = time.monotonic()
    checks = [
        c
        for c in suite("thm-strong-lb")
        if not c.name.endswith("(regression)") and "rounds" not in c.name
    ]
    elapsed = time.monotonic() - start
    _report(4, checks)
    assert elapsed < 60, f"{elapsed:.1f}s exceeds the 60s budget"


def test_criterion_5_algorithm_correctness():
    start = time.monotonic()
    checks = [c for c in suite("algorithms") if "solvable corpus" in c.name]
    elapsed = time.monotonic() - start
    _report(5, checks)
    assert elapsed < 300, f"{elapsed:.1f}s exceeds the 5min budget"


def test_criterion_6_strong_verdict_soundness():
    checks = [c for c in suite("algorithms") if "verdicts" in c.name]
    _report(6, checks)


def test_criterion_7_proposition_suite():
    checks = suite("propositions")
    _report(7, checks)


def test_criterion_8_separation_measurements():
    checks = [
        c
        for c in suite("thm-strong-lb")
        if c.name.endswith("(regression)") or "rounds" in c.name
    ]
    _report(8, checks)
    # the two exponential gaps, as measured round ratios on the 36-node pair
    by_name = {c.name: c.measured for c in suite("thm-strong-lb")}
    slow = by_name["sle-size rounds on G_3"]
    fast = by_name["sle-size-diam rounds on G_3 (regression)"]
    weak = by_name["wle-diam rounds on Gp_3 (regression)"]
    assert slow == 70 and fast == 11 and weak == 27
    print(f"criterion 8: gap sle-size vs sle-size-diam on G_3 = {slow}/{fast}")
    print(f"criterion 8: gap sle-size vs wle-diam on Gp_3 = {slow}/{weak}")


def test_corpus_sizes_match_the_plan():
    assert len(random_solvable()) == 200
    assert all(3 <= g.n <= 20 for _, g in random_solvable())
    names = [name for name, _ in generated_solvable()]
    assert names[:5] == ["Q_2", "Q_3", "Q_4", "Q_5", "Q_6"]
    assert len(generated_unsolvable()) == 14
