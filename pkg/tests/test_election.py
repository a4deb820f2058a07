import pytest

from anonet.families import (
    clique_necklace,
    pendant_chorded_ring,
    spiked_torus,
    symmetric_clique,
    twisted_tori,
    uniform_chorded_ring,
    uniform_cycle,
)
from anonet.graph import PortGraph, diameter
from anonet.election import (
    ALGORITHMS,
    elect,
    round_bound,
    verify_outcome,
)
from anonet.sim import (
    Decision,
    ElectionTranscript,
    IMPOSSIBLE,
    Knowledge,
    LEADER,
    NONLEADER,
    run_sync,
)
from anonet.views import level_of_symmetry, stabilization_depth


def p3():
    return PortGraph(3, [(0, 0, 1, 0), (1, 1, 2, 0)])


def leaders(tr):
    return [u for u, d in enumerate(tr.decisions) if d and d.kind == LEADER]


# --- weak election, known diameter ------------------------------------------


def test_wle_diam_p3():
    g = p3()
    tr = elect(g, "wle-diam")
    assert tr.rounds == 4  # D + Lambda + 1 = 2 + 1 + 1
    rep = verify_outcome(g, tr)
    assert rep.ok
    assert len(leaders(tr)) == 1


def test_wle_diam_torus_bound():
    g = spiked_torus(3)
    tr = elect(g, "wle-diam")
    d, lam = diameter(g), level_of_symmetry(g)
    assert tr.rounds <= 2 * d + lam + 1
    assert verify_outcome(g, tr).ok


def test_wle_diam_necklace_needs_d_plus_lam():
    g = clique_necklace(2, 2)
    tr = elect(g, "wle-diam")
    assert tr.rounds >= 4  # D + lambda
    assert verify_outcome(g, tr).ok


# --- weak election, known size ----------------------------------------------


def test_wle_size_p3():
    g = p3()
    tr = elect(g, "wle-size")
    assert tr.rounds <= 5  # D + Lambda + 2
    assert verify_outcome(g, tr).ok


def test_wle_size_clique():
    g = symmetric_clique(2)
    tr = elect(g, "wle-size")
    assert verify_outcome(g, tr).ok


def test_wle_size_pendant_ring_is_fast():
    g = pendant_chorded_ring(2)
    tr = elect(g, "wle-size")
    rep = verify_outcome(g, tr)
    assert rep.ok
    assert tr.rounds < 2 * g.n - 2
    assert tr.rounds == 14  # regression: D + Lambda + 2 = 7 + 5 + 2


# --- strong election, known size ----------------------------------------------


def test_sle_size_rejects_twisted_tori():
    g = twisted_tori(3)
    tr = elect(g, "sle-size")
    assert tr.rounds == 50  # exactly 2n - 2
    assert {d.kind for d in tr.decisions} == {IMPOSSIBLE}
    assert verify_outcome(g, tr).ok


def test_sle_size_elects_on_torus():
    g = spiked_torus(3)
    tr = elect(g, "sle-size")
    assert tr.rounds == 24
    assert verify_outcome(g, tr).ok


def test_sle_size_rejects_uniform_cycle():
    g = uniform_cycle(4)
    tr = elect(g, "sle-size")
    assert {d.kind for d in tr.decisions} == {IMPOSSIBLE}
    assert verify_outcome(g, tr).ok


# --- strong election, known size and diameter -----------------------------------


def test_sle_size_diam_rejects_twisted_tori_quickly():
    g = twisted_tori(3)
    tr = elect(g, "sle-size-diam")
    d, lam = diameter(g), level_of_symmetry(g)
    assert {x.kind for x in tr.decisions} == {IMPOSSIBLE}
    assert tr.rounds <= 2 * d + lam + 1
    assert verify_outcome(g, tr).ok


def test_sle_size_diam_rejects_chorded_ring_fast():
    g = uniform_chorded_ring(2)
    tr = elect(g, "sle-size-diam")
    assert {x.kind for x in tr.decisions} == {IMPOSSIBLE}
    assert tr.rounds < 2 * g.n - 2
    assert verify_outcome(g, tr).ok


def test_diam_variants_elect_the_same_node():
    g = spiked_torus(3)
    l2 = verify_outcome(g, elect(g, "wle-diam")).leader
    l5 = verify_outcome(g, elect(g, "sle-size-diam")).leader
    assert l2 == l5


# --- degenerate cases -------------------------------------------------------------


def test_single_node_all_algorithms():
    g = PortGraph(1, [])
    for alg in ALGORITHMS:
        tr = elect(g, alg)
        assert tr.rounds == 0
        assert tr.decisions[0].kind == LEADER
        assert verify_outcome(g, tr).ok


def test_knowledge_requirements_enforced():
    g = p3()
    with pytest.raises(ValueError):
        run_sync(g, ALGORITHMS["wle-diam"], Knowledge(n=3))
    with pytest.raises(ValueError):
        run_sync(g, ALGORITHMS["sle-size"], Knowledge(D=2))
    with pytest.raises(ValueError):
        run_sync(g, ALGORITHMS["wle-diam"], Knowledge(D=3))  # wrong diameter


# --- the verifier itself ------------------------------------------------------------


def _forged(algorithm, g, decisions, rounds):
    return ElectionTranscript(
        algorithm=algorithm,
        knowledge=Knowledge(),
        n=g.n,
        rounds=rounds,
        decisions=decisions,
        decided_round=[rounds] * g.n,
        round_bytes=[0] * rounds,
    )


def test_verifier_rejects_two_leaders():
    g = p3()
    tr = _forged(
        "wle-diam",
        g,
        [Decision(LEADER), Decision(LEADER), Decision(NONLEADER, (0,))],
        4,
    )
    rep = verify_outcome(g, tr)
    assert not rep.ok
    assert any("exactly one leader" in p for p in rep.problems)


def test_verifier_rejects_bad_path():
    g = p3()
    tr = _forged(
        "wle-diam",
        g,
        [Decision(LEADER), Decision(NONLEADER, (1,)), Decision(NONLEADER, (0, 0))],
        4,
    )
    rep = verify_outcome(g, tr)
    assert any("path ends at" in p for p in rep.problems)


def test_verifier_rejects_false_impossible():
    g = spiked_torus(3)
    tr = _forged("sle-size", g, [Decision(IMPOSSIBLE)] * g.n, 2 * g.n - 2)
    rep = verify_outcome(g, tr)
    assert any("solvable" in p for p in rep.problems)


def test_verifier_rejects_round_bound_violation():
    g = p3()
    tr = _forged(
        "wle-diam",
        g,
        [Decision(LEADER), Decision(NONLEADER, (0,)), Decision(NONLEADER, (0, 0))],
        40,
    )
    rep = verify_outcome(g, tr)
    assert any("bound" in p for p in rep.problems)


def test_round_bound_table():
    assert round_bound("sle-size", 10, 3, 2) == 18
    assert round_bound("wle-size", 10, 3, 2) == 7
    assert round_bound("wle-diam", 10, 3, 2) == 6
    assert round_bound("sle-size-diam", 10, 3, 2) == 6


def test_agreement_and_paths_on_solvable_corpus():
    graphs = [
        p3(),
        symmetric_clique(3),
        spiked_torus(4),
        pendant_chorded_ring(2),
        clique_necklace(2, 2),
    ]
    for g in graphs:
        d, stable = diameter(g), stabilization_depth(g)
        for alg in ALGORITHMS:
            tr = elect(g, alg)
            rep = verify_outcome(g, tr)
            assert rep.ok, (alg, rep.problems)
            assert tr.rounds <= round_bound(alg, g.n, d, stable)


def test_weak_algorithms_unconstrained_on_unsolvable_are_flagged():
    # weak election makes no promise without solvability; the harness
    # verifier is what catches the nonsense outcome
    g = uniform_cycle(4)
    tr = elect(g, "wle-diam")
    rep = verify_outcome(g, tr)
    assert not rep.ok


def test_leader_has_the_smallest_stabilized_view():
    # end-to-end pin of the election rule: the winner is the node whose
    # view at the stabilization depth is canonically smallest
    from anonet.views import canonical_encode, view_at_depth

    for g in (p3(), symmetric_clique(3), spiked_torus(3)):
        stable = stabilization_depth(g)
        encs = [canonical_encode(view_at_depth(g, u, stable)) for u in range(g.n)]
        want = min(range(g.n), key=lambda u: encs[u])
        for alg in ("wle-diam", "wle-size", "sle-size-diam"):
            assert verify_outcome(g, elect(g, alg)).leader == want


def test_termination_rounds_within_run_length():
    g = clique_necklace(2, 2)
    for alg in ALGORITHMS:
        tr = elect(g, alg)
        assert all(r is not None and r <= tr.rounds for r in tr.decided_round)
        if alg != "wle-size":
            # the fixed-schedule programs decide in the final round together
            assert set(tr.decided_round) == {tr.rounds}


def test_renumbering_preserves_outcomes():
    # anonymity: node programs cannot depend on harness ids, so a renumbered
    # graph yields the same transcript up to that renumbering
    g = spiked_torus(3)
    perm = [(u * 5 + 3) % g.n for u in range(g.n)]
    assert sorted(perm) == list(range(g.n))
    h = g.relabel(perm)
    for alg in ALGORITHMS:
        tr_g = elect(g, alg)
        tr_h = elect(h, alg)
        assert tr_g.rounds == tr_h.rounds
        leader_g = verify_outcome(g, tr_g).leader
        leader_h = verify_outcome(h, tr_h).leader
        assert perm[leader_g] == leader_h
        for u in range(g.n):
            # a decision is a function of the node's view alone, so even the
            # port paths must coincide
            assert tr_g.decisions[u] == tr_h.decisions[perm[u]]
