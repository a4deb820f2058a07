import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anonet.families import (
    random_port_graph,
    spiked_torus,
    symmetric_clique,
    twin_clique,
    twisted_tori,
    uniform_cycle,
)
from anonet.graph import PortGraph, port_isomorphism
from anonet.views import (
    ViewDepthError,
    ViewInterner,
    canonical_encode,
    depth0_colors,
    full_partition,
    is_solvable,
    level_of_symmetry,
    partition_at_depth,
    reconstruct_quotient,
    refine_step,
    shortest_distinguishing_path,
    stabilization_depth,
    view_at_depth,
)


def p3():
    return PortGraph(3, [(0, 0, 1, 0), (1, 1, 2, 0)])


def by_label(g, tag):
    return next(u for u in range(g.n) if g.labels[u] == tag)


# --- explicit views ---------------------------------------------------------


def test_depth0_view_is_the_degree():
    v = view_at_depth(p3(), 1, 0)
    assert v.degree == 2 and v.children == ()


def test_p3_leaf_depth1_view():
    v = view_at_depth(p3(), 0, 1)
    assert v.degree == 1
    (pp, qq, sub) = v.children[0]
    assert (pp, qq, sub.degree) == (0, 0, 2)


def test_clique_corner_depth1_view():
    g = symmetric_clique(2)
    a = by_label(g, "a")
    v = view_at_depth(g, a, 1)
    assert [(p, q) for p, q, _ in v.children] == [(0, 0), (1, 1), (2, 2)]
    assert all(sub.degree == 3 for _, _, sub in v.children)


def test_explicit_depth_cap():
    with pytest.raises(ViewDepthError):
        view_at_depth(p3(), 0, 17)


# --- canonical encoding ------------------------------------------------------


def test_encode_deterministic():
    a = canonical_encode(view_at_depth(p3(), 0, 2))
    b = canonical_encode(view_at_depth(p3(), 0, 2))
    assert a == b


def test_encode_golden_bytes():
    leaf = view_at_depth(p3(), 1, 0)
    assert canonical_encode(leaf) == b"\x01" + (2).to_bytes(4, "big")
    v = view_at_depth(p3(), 0, 1)
    expected = (
        b"\x02"
        + (1).to_bytes(4, "big")
        + (0).to_bytes(4, "big")
        + (0).to_bytes(4, "big")
        + b"\x01"
        + (2).to_bytes(4, "big")
    )
    assert canonical_encode(v) == expected


def test_encode_numeric_order():
    small = canonical_encode(view_at_depth(p3(), 0, 0))  # degree 1
    large = canonical_encode(view_at_depth(p3(), 1, 0))  # degree 2
    assert small < large


def test_p3_end_nodes_distinct_at_depth1():
    g = p3()
    assert canonical_encode(view_at_depth(g, 0, 1)) != canonical_encode(
        view_at_depth(g, 2, 1)
    )


def test_compare_agrees_with_encode_order():
    g = random_port_graph(7, 0.4, 42)
    eng = ViewInterner()
    for t in range(4):
        ids = [eng.from_tree(view_at_depth(g, u, t)) for u in range(g.n)]
        encs = [canonical_encode(view_at_depth(g, u, t)) for u in range(g.n)]
        for i in range(g.n):
            for j in range(g.n):
                want = (encs[i] > encs[j]) - (encs[i] < encs[j])
                assert eng.compare(ids[i], ids[j]) == want


def test_encode_decode_round_trip():
    g = spiked_torus(3)
    eng = ViewInterner()
    vid = eng.from_tree(view_at_depth(g, 5, 3))
    assert eng.decode(eng.encode(vid)) == vid


# --- refinement and partitions ------------------------------------------------


def test_refine_uniform_cycle_stays_uniform():
    g = uniform_cycle(4)
    eng = ViewInterner()
    colors = depth0_colors(g, eng)
    for _ in range(4):
        colors = refine_step(g, colors, eng)
        assert len(set(colors)) == 1


def test_refine_clique_singletons_after_one_step():
    g = symmetric_clique(2)
    eng = ViewInterner()
    colors = refine_step(g, depth0_colors(g, eng), eng)
    assert len(set(colors)) == 4


def test_refine_p3_singletons():
    g = p3()
    eng = ViewInterner()
    colors = refine_step(g, depth0_colors(g, eng), eng)
    assert len(set(colors)) == 3


def test_partition_examples():
    g = p3()
    pi0 = partition_at_depth(g, 0)
    assert sorted(sorted(c) for c in pi0.classes) == [[0, 2], [1]]
    pi1 = partition_at_depth(g, 1)
    assert len(pi1) == 3
    for t in range(3):
        assert len(partition_at_depth(uniform_cycle(6), t)) == 1


def test_partition_single_class_on_uniform_ring():
    from anonet.families import uniform_chorded_ring

    g = uniform_chorded_ring(2)
    for t in (0, 2, 5):
        assert len(partition_at_depth(g, t)) == 1


def test_stabilization_depths():
    assert stabilization_depth(p3()) == 1
    assert stabilization_depth(symmetric_clique(2)) == 1
    assert stabilization_depth(uniform_cycle(4)) == 0


def test_level_of_symmetry_values():
    assert level_of_symmetry(symmetric_clique(2)) == 1
    assert level_of_symmetry(symmetric_clique(3)) == 2
    assert level_of_symmetry(uniform_cycle(4)) == 0


def test_solvability():
    assert is_solvable(spiked_torus(3))
    assert not is_solvable(twisted_tori(3))
    assert is_solvable(PortGraph(1, []))
    assert not is_solvable(twin_clique(3))


def test_sigma_divides_n():
    for g in (twisted_tori(3), twin_clique(3), uniform_cycle(6), p3()):
        pi = full_partition(g)
        assert g.n % pi.sigma == 0
        assert len(pi) * pi.sigma == g.n


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 5000), n=st.integers(2, 12))
def test_class_counts_monotone_and_permanent(seed, n):
    g = random_port_graph(n, 0.35, seed)
    eng = ViewInterner()
    colors = depth0_colors(g, eng)
    counts = [len(set(colors))]
    stable_at = None
    for t in range(n + 3):
        colors = refine_step(g, colors, eng)
        counts.append(len(set(colors)))
        assert counts[-1] >= counts[-2]
        if stable_at is None and counts[-1] == counts[-2]:
            stable_at = t
    assert counts[stable_at + 1 :] == [counts[stable_at + 1]] * len(
        counts[stable_at + 1 :]
    )


def test_lambda_at_most_stabilization():
    for g in (p3(), symmetric_clique(4), spiked_torus(3), twisted_tori(3)):
        assert level_of_symmetry(g) <= stabilization_depth(g)


def test_unique_view_depth_matches_lambda_on_solvable():
    for seed in range(10):
        g = random_port_graph(7, 0.35, 900 + seed)
        if not is_solvable(g):
            continue
        lam = level_of_symmetry(g)
        for t in range(lam + 1):
            encs = [canonical_encode(view_at_depth(g, u, t)) for u in range(g.n)]
            has_unique = any(encs.count(e) == 1 for e in encs)
            assert has_unique == (t >= lam)


# --- reconstruction ------------------------------------------------------------


def test_reconstruct_not_yet_cases():
    g = p3()
    assert reconstruct_quotient(view_at_depth(g, 1, 2), 3) is None
    assert reconstruct_quotient(view_at_depth(g, 0, 0), 3) is None


def test_reconstruct_p3():
    g = p3()
    rebuilt = reconstruct_quotient(view_at_depth(g, 1, 3), 3)
    assert rebuilt is not None
    assert port_isomorphism(rebuilt, g) is not None


def test_reconstruct_clique():
    g = symmetric_clique(2)
    rebuilt = reconstruct_quotient(view_at_depth(g, 0, 3), 4)
    assert rebuilt is not None
    assert port_isomorphism(rebuilt, g) is not None


def test_reconstruct_random_solvable():
    for seed in range(12):
        g = random_port_graph(6, 0.4, 100 + seed)
        if not is_solvable(g):
            continue
        rebuilt = reconstruct_quotient(view_at_depth(g, 0, 2 * g.n - 2, cap=24), g.n)
        assert rebuilt is not None
        assert port_isomorphism(rebuilt, g) is not None


def test_reconstruct_rejects_contract_violations():
    from anonet.views import ReconstructionError

    # lying about the size makes the class graph degenerate (self-loops)
    g = uniform_cycle(6)
    with pytest.raises(ReconstructionError):
        reconstruct_quotient(view_at_depth(g, 0, 4), 1)
    # on a path, the two middle nodes share a degree but disagree on their
    # incident edges, so their shared class has no consistent edge set
    p4 = PortGraph(4, [(0, 0, 1, 0), (1, 1, 2, 0), (2, 1, 3, 0)])
    with pytest.raises(ReconstructionError):
        reconstruct_quotient(view_at_depth(p4, 1, 4), 2)


# --- distinguishing paths --------------------------------------------------------


def test_distinguishing_path_type_mismatch_is_empty():
    g = symmetric_clique(2)
    assert shortest_distinguishing_path(g, by_label(g, "a"), by_label(g, "c")) == ()


def test_distinguishing_path_on_twin_labels():
    g = symmetric_clique(3)
    path = shortest_distinguishing_path(g, by_label(g, "aa"), by_label(g, "ab"))
    assert path is not None and len(path) == 1


def test_distinguishing_path_length_equals_agreement_depth():
    # the shortest type-distinguishing walk is exactly as long as the deepest
    # level at which the two views still agree
    for order in (3, 4):
        g = symmetric_clique(order)
        eng = ViewInterner()
        hist = [depth0_colors(g, eng)]
        for _ in range(order + 1):
            hist.append(refine_step(g, hist[-1], eng))
        for u in range(g.n):
            for v in range(u + 1, g.n):
                ell = max(t for t in range(len(hist)) if hist[t][u] == hist[t][v])
                path = shortest_distinguishing_path(g, u, v)
                assert path is not None and len(path) == ell


def test_distinguishing_path_requires_labels():
    g = p3()
    with pytest.raises(ValueError):
        shortest_distinguishing_path(g, 0, 2)
    labeled = symmetric_clique(2)
    with pytest.raises(ValueError):
        shortest_distinguishing_path(labeled, 1, 1)


def test_distinguishing_path_none_when_types_blind():
    # same-type relabeling blinds the walk: no path can distinguish
    g = uniform_cycle(5)
    g = PortGraph(g.n, g.edges, {u: "a" for u in range(g.n)})
    assert shortest_distinguishing_path(g, 0, 2) is None
