"""Named verification suites: the headline claims as runnable checks.

Each suite returns a list of Check records (name, ok, measured, expected);
the CLI prints them and the acceptance tests assert them.  The corpus
builders are cached because several suites share graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .election import elect, verify_outcome
from .families import (
    clique_necklace,
    pendant_chorded_ring,
    random_port_graph,
    small_case,
    spiked_torus,
    symmetric_clique,
    twin_clique,
    twisted_tori,
    uniform_chorded_ring,
    uniform_cycle,
)
from .graph import PortGraph, bfs_distances, diameter
from .views import (
    ViewInterner,
    canonical_encode,
    depth0_colors,
    full_partition,
    is_solvable,
    level_of_symmetry,
    refine_step,
    stabilization_depth,
    view_at_depth,
)


@dataclass
class Check:
    name: str
    ok: bool
    measured: object
    expected: object

    def line(self):
        verdict = "PASS" if self.ok else "FAIL"
        return f"[{verdict}] {self.name}: measured={self.measured} expected={self.expected}"


def _check(name, measured, expected):
    return Check(name, measured == expected, measured, expected)


_cache = {}


def _graph(kind, *args):
    key = (kind, args)
    if key not in _cache:
        builders = {
            "q": symmetric_clique,
            "qtilde": twin_clique,
            "necklace": clique_necklace,
            "torus": spiked_torus,
            "twisted": twisted_tori,
            "ring": uniform_chorded_ring,
            "pendant": pendant_chorded_ring,
            "small": small_case,
            "cycle": uniform_cycle,
        }
        _cache[key] = builders[kind](*args)
    return _cache[key]


def generated_solvable():
    """The solvable graphs the named suites exercise."""
    graphs = []
    for k in range(1, 6):
        graphs.append((f"Q_{k + 1}", _graph("q", k + 1)))
    for d, lam in ((2, 2), (2, 3), (3, 2)):
        graphs.append((f"R_{d}_{lam}", _graph("necklace", d, lam)))
    for k in range(3, 7):
        graphs.append((f"T_{k}", _graph("torus", k)))
    for k in (2, 3):
        graphs.append((f"Gp_{k}", _graph("pendant", k)))
    graphs.append(("small1_D3", _graph("small", 1, 3, 0)))
    graphs.append(("small2_D2", _graph("small", 2, 2, 1)))
    graphs.append(("small3_lam1", _graph("small", 3, 1, 1)))
    graphs.append(("small3_lam2", _graph("small", 3, 1, 2)))
    return graphs


def generated_unsolvable():
    graphs = []
    for k in range(3, 7):
        graphs.append((f"M_{k}", _graph("twisted", k)))
    for k in (2, 3):
        graphs.append((f"G_{k}", _graph("ring", k)))
    for k in range(1, 6):
        graphs.append((f"Qt_{k}", _graph("qtilde", k)))
    for m in (4, 6, 9):
        graphs.append((f"C_{m}", _graph("cycle", m)))
    return graphs


def random_solvable(count=200, max_n=20, seed=20120801):
    """Deterministic pool of solvable random graphs with 3 <= n <= max_n."""
    key = ("random", count, max_n, seed)
    if key not in _cache:
        graphs = []
        attempt = 0
        while len(graphs) < count:
            n = 3 + (attempt % (max_n - 2))
            density = 0.15 + 0.1 * (attempt % 7)
            g = random_port_graph(n, density, seed + attempt)
            attempt += 1
            if is_solvable(g):
                graphs.append((f"rand{attempt - 1}_n{n}", g))
        _cache[key] = graphs
    return _cache[key]


_history_memo = {}


def _refinement_history(g, extra=3):
    """Colors per depth until stabilization plus `extra` more rounds."""
    key = (id(g), extra)
    if key in _history_memo:
        return _history_memo[key]
    eng = ViewInterner()
    colors = depth0_colors(g, eng)
    history = [colors]
    stable_at = None
    while stable_at is None or len(history) <= stable_at + 1 + extra:
        colors = refine_step(g, history[-1], eng)
        history.append(colors)
        if stable_at is None and len(set(history[-1])) == len(set(history[-2])):
            stable_at = len(history) - 2
    _history_memo[key] = (history, stable_at, eng)
    return _history_memo[key]


def _views_equal_at(g, u, v, t):
    history, _, _ = _refinement_history(g)
    if t < len(history):
        return history[t][u] == history[t][v]
    return history[-1][u] == history[-1][v]


# --- suites -------------------------------------------------------------------


def suite_lemma_clique():
    """Level of symmetry of the symmetric cliques, plus the depth detail."""
    checks = []
    for k in range(1, 6):
        g = _graph("q", k + 1)
        checks.append(_check(f"level_of_symmetry(Q_{k + 1})", level_of_symmetry(g), k))
    g = _graph("q", 3)
    aa = next(u for u in range(g.n) if g.labels[u] == "aa")
    ab = next(u for u in range(g.n) if g.labels[u] == "ab")
    checks.append(_check("Q_3 aa~ab at depth 1", _views_equal_at(g, aa, ab, 1), True))
    checks.append(_check("Q_3 aa!~ab at depth 2", _views_equal_at(g, aa, ab, 2), False))
    return checks


def suite_lemma_ring():
    """Necklace parameters and the antipodal twin view depths."""
    checks = []
    for d, lam in ((2, 2), (2, 3), (3, 2)):
        g = _graph("necklace", d, lam)
        tag = f"R_{d}_{lam}"
        checks.append(_check(f"{tag} solvable", is_solvable(g), True))
        checks.append(_check(f"{tag} diameter", diameter(g), d))
        checks.append(_check(f"{tag} level_of_symmetry", level_of_symmetry(g), lam))
        c = 1 << (lam + 1)
        x, xbar = d * c, d * c + c // 2
        checks.append(
            _check(
                f"{tag} twins equal at depth D+lam-1",
                _views_equal_at(g, x, xbar, d + lam - 1),
                True,
            )
        )
        checks.append(
            _check(
                f"{tag} twins distinct at depth D+lam",
                _views_equal_at(g, x, xbar, d + lam),
                False,
            )
        )
    # embedded-clique depth preservation, spot-checked on R_{2,2}: pairs of
    # the order-3 symmetric clique keep their agreement depth inside the
    # necklace (clique 0 hosts it, node i there is clique-node i)
    g = _graph("necklace", 2, 2)
    q = _graph("q", 3)
    for u in range(q.n):
        for v in range(u + 1, q.n):
            ell = 0
            while _views_equal_at(q, u, v, ell + 1):
                ell += 1
            checks.append(
                _check(
                    f"R_2_2 embedded pair {q.labels[u]},{q.labels[v]} equal to depth {ell}",
                    _views_equal_at(g, u, v, ell),
                    True,
                )
            )
    return checks


def suite_thm_weak_lb():
    """Small-case parameters and the measured cost floor on the necklace."""
    checks = []
    g = _graph("small", 1, 3, 0)
    checks.append(_check("case1 D", diameter(g), 3))
    checks.append(_check("case1 lambda", level_of_symmetry(g), 0))
    g = _graph("small", 2, 2, 1)
    checks.append(_check("case2 solvable", is_solvable(g), True))
    checks.append(_check("case2 D", diameter(g), 2))
    checks.append(_check("case2 lambda", level_of_symmetry(g), 1))
    g = _graph("small", 3, 1, 1)
    checks.append(_check("case3 D", diameter(g), 1))
    checks.append(_check("case3 lambda", level_of_symmetry(g), 1))
    g = _graph("necklace", 2, 2)
    tr = elect(g, "wle-diam")
    checks.append(
        Check("R_2_2 wle-diam rounds >= D+lam", tr.rounds >= 4, tr.rounds, ">= 4")
    )
    checks.append(_check("R_2_2 wle-diam verified", verify_outcome(g, tr).ok, True))
    return checks


def suite_thm_impossibility():
    """Solvable/unsolvable torus twins with equal diameters."""
    checks = []
    for k in range(3, 7):
        t = _graph("torus", k)
        m = _graph("twisted", k)
        checks.append(_check(f"T_{k} solvable", is_solvable(t), True))
        checks.append(_check(f"M_{k} unsolvable", is_solvable(m), False))
        checks.append(_check(f"diameter(T_{k})", diameter(t), k + 1))
        checks.append(_check(f"diameter(M_{k})", diameter(m), k + 1))
        sizes = {len(c) for c in full_partition(m).classes}
        checks.append(_check(f"M_{k} class sizes", sizes, {2}))
    return checks


def suite_thm_strong_lb():
    """Chorded-ring facts plus the measured strong-election separations."""
    checks = []
    for k in (2, 3):
        g = _graph("ring", k)
        gp = _graph("pendant", k)
        n_expected = 5 * (1 << k) - 4
        checks.append(_check(f"G_{k} node count", g.n, n_expected))
        checks.append(_check(f"Gp_{k} node count", gp.n, n_expected))
        checks.append(_check(f"|Pi(G_{k})|", len(full_partition(g)), 1))
        checks.append(_check(f"Gp_{k} solvable", is_solvable(gp), True))
        checks.append(
            Check(f"diameter(G_{k}) <= 4k+2", diameter(g) <= 4 * k + 2, diameter(g), f"<= {4 * k + 2}")
        )
        # far from the pendant, the solvable ring is locally identical to
        # the unsolvable one down to depth 2^k - 1
        eng = ViewInterner()
        t = (1 << k) - 1
        cg = depth0_colors(g, eng)
        cgp = depth0_colors(gp, eng)
        for _ in range(t):
            cg = refine_step(g, cg, eng)
            cgp = refine_step(gp, cgp, eng)
        dist = bfs_distances(gp, gp.n - 1)
        far = [u for u in range(gp.n) if dist[u] >= (1 << k) + 3]
        checks.append(Check(f"Gp_{k} has far nodes", bool(far), len(far), ">= 1"))
        matching = all(cgp[u] == cg[0] for u in far)
        checks.append(
            _check(f"Gp_{k} far nodes share G_{k}'s depth-{t} view", matching, True)
        )
    # separation measurements (regression values)
    g3 = _graph("ring", 3)
    gp3 = _graph("pendant", 3)
    tr4_g = elect(g3, "sle-size")
    tr4_gp = elect(gp3, "sle-size")
    checks.append(_check("sle-size rounds on G_3", tr4_g.rounds, 70))
    checks.append(_check("sle-size rounds on Gp_3", tr4_gp.rounds, 70))
    for name, g in (("G_3", g3), ("Gp_3", gp3)):
        d = diameter(g)
        lam = level_of_symmetry(g)
        tr5 = elect(g, "sle-size-diam")
        bound = 2 * d + lam + 1
        checks.append(
            Check(
                f"sle-size-diam rounds on {name} <= 2D+lam+1",
                tr5.rounds <= bound,
                tr5.rounds,
                f"<= {bound}",
            )
        )
    checks.append(_check("sle-size-diam rounds on G_3 (regression)", elect(g3, "sle-size-diam").rounds, 11))
    checks.append(_check("sle-size-diam rounds on Gp_3 (regression)", elect(gp3, "sle-size-diam").rounds, 27))
    tr2 = elect(gp3, "wle-diam")
    d, stable = diameter(gp3), stabilization_depth(gp3)
    checks.append(
        Check(
            "wle-diam rounds on Gp_3 <= D+Lambda+1",
            tr2.rounds <= d + stable + 1,
            tr2.rounds,
            f"<= {d + stable + 1}",
        )
    )
    checks.append(_check("wle-diam rounds on Gp_3 (regression)", tr2.rounds, 27))
    return checks


def suite_propositions():
    """Partition monotonicity/permanence, the Lambda <= D+lambda bound, the
    solvability equivalences, and interned-vs-explicit agreement."""
    checks = []
    corpus = generated_solvable() + generated_unsolvable() + random_solvable()
    mono_ok = perm_ok = bound_ok = equiv_ok = True
    for name, g in corpus:
        history, stable_at, _ = _refinement_history(g, extra=3)
        counts = [len(set(c)) for c in history]
        if any(counts[i] > counts[i + 1] for i in range(len(counts) - 1)):
            mono_ok = False
            checks.append(Check(f"{name} |Pi_t| nondecreasing", False, counts, "sorted"))
        tail = history[stable_at:]
        first = _grouping(tail[0])
        if any(_grouping(c) != first for c in tail[1:]):
            perm_ok = False
            checks.append(Check(f"{name} partition permanent after repeat", False, "-", "-"))
        d = diameter(g)
        lam = level_of_symmetry(g)
        stable = stable_at
        if stable > d + lam:
            bound_ok = False
            checks.append(
                Check(f"{name} Lambda <= D+lambda", False, stable, f"<= {d + lam}")
            )
        pi = full_partition(g)
        solvable = pi.sigma == 1
        if g.n - 1 < len(history):
            classes_n1 = len(set(history[g.n - 1]))
        else:
            classes_n1 = len(set(history[-1]))
        if (
            solvable != (classes_n1 == g.n)
            or solvable != (len(pi) == g.n)
            or (g.n % pi.sigma != 0)
        ):
            equiv_ok = False
            checks.append(Check(f"{name} solvability equivalences", False, "-", "-"))
        if lam > stable:
            checks.append(Check(f"{name} lambda <= Lambda", False, lam, f"<= {stable}"))
    checks.append(_check("monotone class counts (whole corpus)", mono_ok, True))
    checks.append(_check("partition permanence (whole corpus)", perm_ok, True))
    checks.append(_check("Lambda <= D+lambda (whole corpus)", bound_ok, True))
    checks.append(_check("solvability equivalences (whole corpus)", equiv_ok, True))
    checks.append(_check("interned matches explicit grouping", _oracle_agreement(), True))
    return checks


def _grouping(colors):
    groups = {}
    for u, c in enumerate(colors):
        groups.setdefault(c, set()).add(u)
    return sorted(frozenset(s) for s in groups.values())


def _small_oracle_corpus():
    graphs = [
        PortGraph(1, []),
        PortGraph(2, [(0, 0, 1, 0)]),
        PortGraph(3, [(0, 0, 1, 0), (1, 1, 2, 0)]),
        PortGraph(3, [(0, 0, 1, 1), (1, 0, 2, 0)]),
        _graph("q", 2),
        _graph("qtilde", 2),
        _graph("q", 3),
        _graph("cycle", 4),
        _graph("cycle", 5),
    ]
    for seed in range(40):
        n = 3 + seed % 6
        graphs.append(random_port_graph(n, 0.3 + 0.05 * (seed % 5), 7000 + seed))
    return graphs


def _oracle_agreement():
    corpus = _small_oracle_corpus()
    corpus += [g for _, g in random_solvable() if g.n <= 8]
    for g in corpus:
        if g.n > 8:
            continue
        eng = ViewInterner()
        colors = depth0_colors(g, eng)
        for t in range(5):
            by_id = {}
            by_enc = {}
            for u in range(g.n):
                by_id.setdefault(colors[u], set()).add(u)
                by_enc.setdefault(canonical_encode(view_at_depth(g, u, t)), set()).add(u)
            if sorted(map(sorted, by_id.values())) != sorted(map(sorted, by_enc.values())):
                return False
            colors = refine_step(g, colors, eng)
    return True


def suite_algorithms():
    """Every algorithm on every solvable graph in the corpus, plus the
    strong algorithms' verdicts on the unsolvable graphs."""
    checks = []
    solvable_corpus = generated_solvable() + random_solvable()
    bad = []
    for name, g in solvable_corpus:
        for alg in ("wle-diam", "wle-size", "sle-size", "sle-size-diam"):
            tr = elect(g, alg)
            rep = verify_outcome(g, tr)
            if not rep.ok:
                bad.append(f"{name}/{alg}: {rep.problems}")
        tr2 = elect(g, "wle-diam")
        tr5 = elect(g, "sle-size-diam")
        l2 = verify_outcome(g, tr2).leader
        l5 = verify_outcome(g, tr5).leader
        if l2 != l5:
            bad.append(f"{name}: wle-diam and sle-size-diam disagree ({l2} vs {l5})")
    checks.append(Check("elections verified on solvable corpus", not bad, bad or "all ok", "all ok"))
    mism = []
    for name, g in generated_unsolvable():
        for alg in ("sle-size", "sle-size-diam"):
            tr = elect(g, alg)
            rep = verify_outcome(g, tr)
            if not rep.ok:
                mism.append(f"{name}/{alg}: {rep.problems}")
            kinds = {d.kind for d in tr.decisions}
            if kinds != {"impossible"}:
                mism.append(f"{name}/{alg}: verdicts {kinds}")
    checks.append(Check("strong verdicts match solvability", not mism, mism or "all ok", "all ok"))
    return checks


SUITES = {
    "lemma-clique": suite_lemma_clique,
    "lemma-ring": suite_lemma_ring,
    "thm-weak-lb": suite_thm_weak_lb,
    "thm-impossibility": suite_thm_impossibility,
    "thm-strong-lb": suite_thm_strong_lb,
    "propositions": suite_propositions,
    "algorithms": suite_algorithms,
}


def run_suite(name):
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        ) from None
    return suite()
