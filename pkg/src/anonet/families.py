"""Deterministic generators for the benchmark graph families.

Clique families (symmetric_clique / twin_clique) and their cyclic
arrangements realize tunable levels of symmetry; the torus and chorded-ring
families witness the impossibility and strong-election lower-bound
separations.  Every generator is a pure function of its parameters and its
output passes validate_graph.

Label scheme: clique nodes carry their letter string over {a,b,c,d}
(the node's type is the first letter); in clique necklaces the label gets a
".<clique index>" suffix.  Other families are unlabeled.
"""

from __future__ import annotations

import random

from .graph import PortGraph, validate_graph


class _CliqueStruct:
    """Internal scaffold for building the clique families.

    edges hold (u, p, v, q); color maps an unordered node pair to the edge's
    color, where skew edges (present only in the symmetric cliques) carry no
    color.  labels are letter strings; in the copy-block layout used
    throughout, the partner sharing a label prefix-half with node x is always
    x +- n/2, and so is the view-twin in a twin clique.
    """

    __slots__ = ("n", "edges", "color", "labels", "level_a", "level_b")

    def __init__(self, n, edges, color, labels, level_a=(), level_b=()):
        self.n = n
        self.edges = edges
        self.color = color
        self.labels = labels
        self.level_a = level_a  # top-level skew edges (x,0)-(x,1)
        self.level_b = level_b  # top-level skew edges (x,1)-(sib x,0)

    def graph(self):
        g = PortGraph(self.n, self.edges, dict(enumerate(self.labels)))
        report = validate_graph(g)
        if not report.ok:
            raise AssertionError(
                "clique construction produced an invalid graph: "
                + "; ".join(report.problems)
            )
        return g

    def port_map(self):
        ports = [{} for _ in range(self.n)]
        for u, p, v, q in self.edges:
            ports[u][p] = (v, q)
            ports[v][q] = (u, p)
        return ports


def _q2_struct():
    # 4-clique on a,b,c,d; colors 0/1/2 are the three perfect matchings.
    edges = [
        (0, 0, 1, 0),  # {a,b}
        (0, 1, 2, 1),  # {a,c}
        (0, 2, 3, 2),  # {a,d}
        (1, 2, 2, 0),  # {b,c}
        (1, 1, 3, 1),  # {b,d}
        (2, 2, 3, 0),  # {c,d}
    ]
    color = {
        frozenset((0, 1)): 0,
        frozenset((2, 3)): 0,
        frozenset((0, 2)): 1,
        frozenset((1, 3)): 1,
        frozenset((0, 3)): 2,
        frozenset((1, 2)): 2,
    }
    return _CliqueStruct(4, edges, color, ["a", "b", "c", "d"])


def _q3_struct():
    # Copy-block layout: 0..3 = a,b,c,d (labels aa,bb,cc,dd),
    # 4..7 their copies (labels ab,ba,cd,dc).
    base = _q2_struct()
    edges = list(base.edges)
    color = dict(base.color)
    for u, p, v, q in base.edges:
        edges.append((u + 4, p, v + 4, q))
        color[frozenset((u + 4, v + 4))] = base.color[frozenset((u, v))]
    mono = [
        # color 3: {a,c-bar}, {a-bar,c}, {b,d-bar}, {b-bar,d}
        (0, 6, 3),
        (4, 2, 3),
        (1, 7, 3),
        (5, 3, 3),
        # color 4: {a,d-bar}, {a-bar,d}, {b,c-bar}, {b-bar,c}
        (0, 7, 4),
        (4, 3, 4),
        (1, 6, 4),
        (5, 2, 4),
    ]
    for u, v, c in mono:
        edges.append((u, c, v, c))
        color[frozenset((u, v))] = c
    level_a = []
    level_b = []
    sib2 = {0: 1, 1: 0, 2: 3, 3: 2}  # color-0 partners a<->b, c<->d
    for x in range(4):
        edges.append((x, 6, x + 4, 5))
        level_a.append((x, x + 4))
        tgt = sib2[x]
        edges.append((x + 4, 6, tgt, 5))
        level_b.append((x + 4, tgt))
    labels = ["aa", "bb", "cc", "dd", "ab", "ba", "cd", "dc"]
    return _CliqueStruct(8, edges, color, labels, tuple(level_a), tuple(level_b))


def _lift_clique(base):
    """Build the 2n-node symmetric clique from an n-node one (n = 2^k, k >= 3).

    Node (x, copy) becomes x + copy*n.  Cross edges: every colored edge lifts
    twice with color 2^k+c-1; the newest cross-label skew edges lift (both
    mirror pairs) with color 2^{k+1}-4; each older skew 4-cycle lifts into
    eight edges across two colors; and the new skew edges themselves get
    ports (2^{k+1}-2, 2^{k+1}-3).
    """
    n = base.n
    k = n.bit_length() - 1  # n == 2^k
    ports = base.port_map()
    half = n // 2

    def sib(x):
        return x + half if x < half else x - half

    edges = []
    color = {}
    for u, p, v, q in base.edges:
        edges.append((u, p, v, q))
        edges.append((u + n, p, v + n, q))
    for pair, c in base.color.items():
        u, v = sorted(pair)
        color[frozenset((u, v))] = c
        color[frozenset((u + n, v + n))] = c
        lifted = (1 << k) + c - 1
        edges.append((u, lifted, v + n, lifted))
        edges.append((u + n, lifted, v, lifted))
        color[frozenset((u, v + n))] = lifted
        color[frozenset((u + n, v))] = lifted
    # newest cross-label skew edges lift with both mirror pairs; the
    # same-label ones are exactly the pairs the new skew matching will use
    c_new = (1 << (k + 1)) - 4
    for a, b in base.level_b:
        edges.append((b, c_new, a + n, c_new))
        edges.append((b + n, c_new, a, c_new))
        color[frozenset((b, a + n))] = c_new
        color[frozenset((b + n, a))] = c_new
    # older skew 4-cycles, levels 3..k-1
    for j in range(3, k):
        out_port = (1 << j) - 2
        seen = set()
        c_a = (1 << k) + (1 << j) - 4
        c_b = (1 << k) + (1 << j) - 3
        for x in range(n):
            if x in seen or x % (1 << j) >= (1 << (j - 1)):
                continue
            cyc = [x]
            cur = x
            for _ in range(3):
                cur = ports[cur][out_port][0]
                cyc.append(cur)
            if ports[cyc[-1]][out_port][0] != x or len(set(cyc)) != 4:
                raise AssertionError(f"level-{j} skew edges do not form a 4-cycle")
            seen.update(cyc)
            u, w, v, z = cyc
            for a, b in ((u, w), (w, u), (v, z), (z, v)):
                edges.append((a, c_a, b + n, c_a))
                color[frozenset((a, b + n))] = c_a
            for a, b in ((u, z), (z, u), (v, w), (w, v)):
                edges.append((a, c_b, b + n, c_b))
                color[frozenset((a, b + n))] = c_b
    # new skew edges
    p_out = (1 << (k + 1)) - 2
    p_in = (1 << (k + 1)) - 3
    level_a = []
    level_b = []
    for x in range(n):
        edges.append((x, p_out, x + n, p_in))
        level_a.append((x, x + n))
        edges.append((x + n, p_out, sib(x), p_in))
        level_b.append((x + n, sib(x)))
    labels = [""] * (2 * n)
    for x in range(n):
        labels[x] = base.labels[x] + base.labels[x]
        labels[x + n] = base.labels[x] + base.labels[sib(x)]
    return _CliqueStruct(2 * n, edges, color, labels, tuple(level_a), tuple(level_b))


def _q_struct(k):
    if k < 2:
        raise ValueError("clique structs start at 4 nodes")
    struct = _q2_struct() if k == 2 else _q3_struct()
    for _ in range(k - 3):
        struct = _lift_clique(struct)
    return struct


def _qtilde_struct(k):
    """Twin clique: the symmetric clique with its newest skew matchings made
    monochromatic, which glues every node to an identical-view twin x +- n/2."""
    if k == 2:
        edges = [
            (0, 0, 1, 0),
            (2, 0, 3, 0),
            (0, 1, 2, 1),
            (1, 1, 3, 1),
            (0, 2, 3, 2),
            (1, 2, 2, 2),
        ]
        color = {
            frozenset((0, 1)): 0,
            frozenset((2, 3)): 0,
            frozenset((0, 2)): 1,
            frozenset((1, 3)): 1,
            frozenset((0, 3)): 2,
            frozenset((1, 2)): 2,
        }
        return _CliqueStruct(4, edges, color, ["a", "b", "c", "d"])
    struct = _q_struct(k)
    p_hi = (1 << k) - 2
    p_lo = (1 << k) - 3
    rewrite = {}
    for u, v in struct.level_a:
        rewrite[frozenset((u, v))] = p_hi
    for u, v in struct.level_b:
        rewrite[frozenset((u, v))] = p_lo
    edges = []
    color = dict(struct.color)
    for u, p, v, q in struct.edges:
        key = frozenset((u, v))
        c = rewrite.get(key)
        if c is None:
            edges.append((u, p, v, q))
        else:
            edges.append((u, c, v, c))
            color[key] = c
    return _CliqueStruct(struct.n, edges, color, list(struct.labels))


def symmetric_clique(k):
    """Clique on 2^k nodes whose port labeling has level of symmetry k-1.

    k=1 is the single node; k=2 the 4-clique whose nodes are pairwise
    distinguished one hop out; each doubling defers the last distinction one
    level deeper.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return PortGraph(1, [], {0: "a"})
    return _q_struct(k).graph()


def twin_clique(k):
    """Clique on 2^k nodes (2 for k=1) where every node has a view-twin,
    so leader election is impossible; the twin of x is x +- 2^{k-1}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return PortGraph(2, [(0, 0, 1, 0)], {0: "a", 1: "b"})
    return _qtilde_struct(k).graph()


def cross_color_table(k):
    """Colors of the copy-0 x copy-1 edges of the order-k twin clique.

    table[i][j] = the color (= shared port) of the edge joining copy-0 node i
    with copy-1 node j in the twin clique on 2^k nodes.  This is the port
    rule used to join consecutive cliques in necklaces and clique pairs.
    """
    struct = _qtilde_struct(k)
    half = struct.n // 2
    table = [[None] * half for _ in range(half)]
    for u, p, v, q in struct.edges:
        if u < half <= v:
            table[u][v - half] = p
        elif v < half <= u:
            table[v][u - half] = q
    for row in table:
        if any(c is None for c in row):
            raise AssertionError("cross-color table incomplete")
    return table


def _necklace(diameter_d, lam):
    """Cyclic arrangement of one symmetric clique and 2D-1 twin cliques.

    Every node joins all nodes of the next clique; the edge from a label-x
    node to a label-y node of the next clique takes port i forward and
    i + 2^{lam+1} backward, where i is the cross color x would get toward
    the twin of y one clique order higher.
    """
    if diameter_d < 2:
        raise ValueError("diameter parameter must be >= 2")
    if lam < 1:
        raise ValueError("symmetry parameter must be >= 1")
    q = _q_struct(lam + 1)
    qt = _qtilde_struct(lam + 1)
    table = cross_color_table(lam + 2)
    c = q.n
    cliques = 2 * diameter_d
    edges = []
    labels = {}
    for t in range(cliques):
        struct = q if t == 0 else qt
        off = t * c
        for u, p, v, q2 in struct.edges:
            edges.append((u + off, p, v + off, q2))
        for i, tag in enumerate(struct.labels):
            labels[off + i] = f"{tag}.{t}"
    for t in range(cliques):
        off = t * c
        off2 = ((t + 1) % cliques) * c
        for i in range(c):
            for j in range(c):
                col = table[i][j]
                edges.append((off + i, col, off2 + j, col + c))
    g = PortGraph(cliques * c, edges, labels)
    report = validate_graph(g)
    if not report.ok:
        raise AssertionError("necklace construction invalid: " + "; ".join(report.problems))
    return g


def clique_necklace(diameter_d, lam):
    """Necklace of 2D cliques: diameter D, level of symmetry lam, solvable,
    and weak election needs at least D+lam rounds on it.

    Node layout: clique t occupies ids [t*c, (t+1)*c) with c = 2^{lam+1};
    the symmetric clique sits at t = 0, and the view-twin of node i within a
    twin clique is i +- c/2.
    """
    if lam < 2:
        raise ValueError("use small_case for symmetry below 2")
    return _necklace(diameter_d, lam)


def small_case(case, diameter_d, lam):
    """Low-parameter lower-bound graphs: the three cases outside the
    necklace's (D >= 2, lam >= 2) range.

    case 1 (lam = 0, D >= 2): a tadpole (cycle of length 2D-1 plus a pendant);
    the original figure-only graph is not recoverable, so this substitute's
    D and lam are what tests verify.
    case 2 (lam = 1, D >= 2): the necklace built over the 4-node cliques.
    case 3 (lam >= 1, D = 1): one symmetric and one twin clique joined into a
    clique, cross edges colored by the order lam+2 cross table.
    """
    if case == 1:
        if lam != 0 or diameter_d < 2:
            raise ValueError("case 1 needs lam = 0 and D >= 2")
        return tadpole(diameter_d)
    if case == 2:
        if lam != 1 or diameter_d < 2:
            raise ValueError("case 2 needs lam = 1 and D >= 2")
        return _necklace(diameter_d, 1)
    if case == 3:
        if lam < 1 or diameter_d != 1:
            raise ValueError("case 3 needs lam >= 1 and D = 1")
        return clique_pair(lam)
    raise ValueError(f"unknown case {case!r}")


def clique_pair(lam):
    """Clique on 2^{lam+2} nodes joining a symmetric and a twin clique;
    diameter 1 with level of symmetry lam."""
    q = _q_struct(lam + 1)
    qt = _qtilde_struct(lam + 1)
    table = cross_color_table(lam + 2)
    c = q.n
    edges = []
    labels = {}
    for u, p, v, q2 in q.edges:
        edges.append((u, p, v, q2))
    for u, p, v, q2 in qt.edges:
        edges.append((u + c, p, v + c, q2))
    for i, tag in enumerate(q.labels):
        labels[i] = f"{tag}.q"
    for i, tag in enumerate(qt.labels):
        labels[c + i] = f"{tag}.t"
    for i in range(c):
        for j in range(c):
            col = table[i][j]
            edges.append((i, col, c + j, col))
    g = PortGraph(2 * c, edges, labels)
    report = validate_graph(g)
    if not report.ok:
        raise AssertionError("clique pair invalid: " + "; ".join(report.problems))
    return g


def tadpole(diameter_d):
    """Cycle of length 2D-1 with one pendant node: diameter D, level of
    symmetry 0 (the pendant and its anchor have unique degrees)."""
    if diameter_d < 2:
        raise ValueError("D must be >= 2")
    m = 2 * diameter_d - 1
    edges = []
    for i in range(m):
        edges.append((i, 0, (i + 1) % m, 1))
    edges.append((0, 2, m, 0))
    return PortGraph(m + 1, edges)


def uniform_cycle(m):
    """Cycle with port 0 forward and 1 backward everywhere: all views equal."""
    if m < 3:
        raise ValueError("cycle needs at least 3 nodes")
    return PortGraph(m, [(i, 0, (i + 1) % m, 1) for i in range(m)])


# --- torus families -----------------------------------------------------------


def spiked_torus(k):
    """Double ring of length 2k with rungs and diagonals, plus one degree-2
    spike node: 4k+1 nodes, diameter k+1, solvable (the spike's degree is
    unique).  Ports: ring 0/1, rung 2, diagonals 3/4, spike edges 5 and 0/1.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    ring = 2 * k

    def node(i, s):
        return s * ring + (i % ring)

    edges = []
    for s in (0, 1):
        for i in range(ring):
            edges.append((node(i, s), 0, node(i + 1, s), 1))
    for i in range(ring):
        edges.append((node(i, 0), 2, node(i, 1), 2))
    for s in (0, 1):
        for i in range(ring):
            edges.append((node(i, s), 3, node(i + 1, 1 - s), 4))
    z = 2 * ring
    edges.append((node(0, 0), 5, z, 0))
    edges.append((node(0, 1), 5, z, 1))
    return PortGraph(2 * ring + 1, edges)


def twisted_tori(k):
    """Two spiked tori with all diagonal edges crossed between the copies:
    8k+2 nodes, same diameter k+1, but every node gains an identical-view
    twin in the other copy, so leader election is impossible."""
    if k < 3:
        raise ValueError("k must be >= 3")
    ring = 2 * k
    per = 4 * k + 1

    def node(i, s, c):
        return c * per + s * ring + (i % ring)

    edges = []
    for c in (0, 1):
        for s in (0, 1):
            for i in range(ring):
                edges.append((node(i, s, c), 0, node(i + 1, s, c), 1))
        for i in range(ring):
            edges.append((node(i, 0, c), 2, node(i, 1, c), 2))
        z = c * per + 2 * ring
        edges.append((node(0, 0, c), 5, z, 0))
        edges.append((node(0, 1, c), 5, z, 1))
    for c in (0, 1):
        for s in (0, 1):
            for i in range(ring):
                edges.append((node(i, s, c), 3, node(i + 1, 1 - s, 1 - c), 4))
    return PortGraph(2 * per, edges)


# --- chorded rings -------------------------------------------------------------


def uniform_chorded_ring(k):
    """3-regular ring of 5*2^k-4 nodes with recursively nested chords.

    Ring ports 0/1 run consistently around; chords take port 2 at both ends,
    so every node sees the same view at every depth and election is
    impossible, yet the diameter is only O(k).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    m = 5 * (1 << k) - 4
    edges = [(i, 0, (i + 1) % m, 1) for i in range(m)]
    chords = []

    def process(seg):
        edge_count = len(seg) - 1
        c = (edge_count + 1) // 2
        x, y = seg[c - 1], seg[c]
        chords.append((seg[1], x))
        chords.append((seg[edge_count - 1], y))
        left = seg[1:c]
        right = seg[c : edge_count]
        if len(left) - 1 > 2:
            process(left)
            process(right)
        else:
            chords.append((left[1], right[1]))

    process([i % m for i in range(m + 2)])
    for u, v in chords:
        edges.append((u, 2, v, 2))
    g = PortGraph(m, edges)
    report = validate_graph(g)
    if not report.ok:
        raise AssertionError("chorded ring invalid: " + "; ".join(report.problems))
    if any(g.degree(u) != 3 for u in range(m)):
        raise AssertionError("chorded ring is not 3-regular")
    return g


def pendant_chorded_ring(k):
    """Ring of 5*2^k-5 nodes with groups-of-four chords and one pendant node:
    same size as the uniform chorded ring, solvable (unique degree-1 node),
    and far from the pendant it is locally indistinguishable from it."""
    if k < 2:
        raise ValueError("k must be >= 2")
    m = 5 * (1 << k) - 5
    edges = [(i, 0, (i + 1) % m, 1) for i in range(m)]
    edges.append((0, 2, m, 0))
    groups = (m - 1) // 4
    for t in range(groups):
        base = 1 + 4 * t
        edges.append((base, 2, base + 2, 2))
        edges.append((base + 1, 2, base + 3, 2))
    return PortGraph(m + 1, edges)


# --- random graphs --------------------------------------------------------------


def random_port_graph(n, edge_density, seed):
    """Connected simple graph with uniformly random valid port assignment.

    A random spanning tree guarantees connectivity; every remaining pair is
    added with probability edge_density; each node then shuffles the ports
    of its incident edges.  Deterministic in seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    pairs = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        anchor = order[rng.randrange(idx)]
        pairs.add(frozenset((order[idx], anchor)))
    for u in range(n):
        for v in range(u + 1, n):
            if frozenset((u, v)) not in pairs and rng.random() < edge_density:
                pairs.add(frozenset((u, v)))
    incident = [[] for _ in range(n)]
    for pair in sorted(tuple(sorted(p)) for p in pairs):
        u, v = pair
        incident[u].append((u, v))
        incident[v].append((u, v))
    port_of = {}
    for u in range(n):
        ports = list(range(len(incident[u])))
        rng.shuffle(ports)
        for (a, b), p in zip(incident[u], ports):
            port_of[(a, b, u)] = p
    edges = []
    for pair in sorted(tuple(sorted(p)) for p in pairs):
        u, v = pair
        edges.append((u, port_of[(u, v, u)], v, port_of[(u, v, v)]))
    return PortGraph(n, edges)
