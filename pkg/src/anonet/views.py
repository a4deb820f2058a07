"""Views, canonical ordering, partition refinement, and derived symmetry parameters.

The depth-t view of a node is the tree of all port-labeled walks of length t
starting there: exactly what the node can know after t communication rounds.
Explicit trees (ViewTree) exist for small-scale oracle work; everything at
scale runs on interned view ids (ViewInterner), where one refinement round
costs O(m) instead of the exponential cost of explicit expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import PortGraph, validate_graph

EXPLICIT_DEPTH_CAP = 16


class ViewDepthError(ValueError):
    """Explicit tree expansion requested beyond the configured cap."""


class ReconstructionError(RuntimeError):
    """Representatives of a view class disagree on incident edges."""


class ViewTree:
    """Explicit truncated view: root degree plus one subtree per port.

    children is a tuple of (p, q, subtree) sorted by the parent-side port p;
    it is empty exactly at depth 0.  Instances are shared aggressively (the
    builders memoize), so __eq__ shortcuts on identity.
    """

    __slots__ = ("degree", "children", "depth", "_hash")

    def __init__(self, degree, children=(), depth=0):
        self.degree = degree
        self.children = children
        self.depth = depth
        self._hash = hash((degree, children))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ViewTree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.degree == other.degree
            and self.children == other.children
        )

    def __repr__(self):
        return f"ViewTree(degree={self.degree}, depth={self.depth})"


def view_at_depth(g, u, t, cap=EXPLICIT_DEPTH_CAP):
    """Explicit depth-t view of node u.  Oracle-grade: exponential in t.

    Subtrees are shared across the whole expansion, so memory stays O(n*t);
    printing or encoding the result may still be exponential.
    """
    if t < 0:
        raise ValueError("depth must be nonnegative")
    if t > cap:
        raise ViewDepthError(f"explicit views capped at depth {cap}, got {t}")
    memo = {}

    def build(node, depth):
        key = (node, depth)
        got = memo.get(key)
        if got is None:
            if depth == 0:
                got = ViewTree(g.degree(node), (), 0)
            else:
                children = tuple(
                    (p, q, build(v, depth - 1)) for p, v, q in g.port_items(node)
                )
                got = ViewTree(g.degree(node), children, depth)
            memo[key] = got
        return got

    return build(u, t)


def canonical_encode(view):
    """Injective byte encoding; byte order realizes the canonical view order.

    depth-0: 0x01 + degree (4-byte big-endian).
    depth-t: 0x02 + degree, then per child in increasing p:
             p (4 bytes) + q (4 bytes) + child encoding.
    Fixed-width numbers make byte order agree with numeric order.
    """
    out = bytearray()
    _encode_tree(view, out)
    return bytes(out)


def _encode_tree(view, out):
    if not view.children:
        out += b"\x01" + view.degree.to_bytes(4, "big")
        return
    out += b"\x02" + view.degree.to_bytes(4, "big")
    for p, q, sub in view.children:
        out += p.to_bytes(4, "big") + q.to_bytes(4, "big")
        _encode_tree(sub, out)


class ViewInterner:
    """Hash-consing table: one integer id per distinct truncated view.

    Two nodes share an id at depth t iff their depth-t views are equal.
    Every id also stores its one-level truncation, so truncating a view to
    any shallower depth is a chain of O(1) lookups; this is what lets node
    programs count partition classes without touching explicit trees.
    The table is the only shared mutable state; callers serialize writes.
    """

    def __init__(self):
        self._ids = {}
        self._key = []
        self._depth = []
        self._trunc1 = []
        self._cmp = {}

    def leaf(self, degree):
        """Depth-0 view: the degree alone."""
        return self._intern(degree, ())

    def node(self, degree, children):
        """View from degree plus per-port (p, q, child id) tuples sorted by p."""
        return self._intern(degree, tuple(children))

    def _intern(self, degree, children):
        key = (degree, children)
        got = self._ids.get(key)
        if got is not None:
            return got
        # resolve depth and the one-level truncation before registering, so
        # nested interning cannot interleave with this entry's bookkeeping
        if not children:
            depth = 0
            t1 = None
        else:
            depth = self._depth[children[0][2]] + 1
            if depth == 1:
                t1 = self.leaf(degree)
            else:
                t1 = self._intern(
                    degree,
                    tuple((p, q, self._trunc1[c]) for p, q, c in children),
                )
        vid = len(self._key)
        self._ids[key] = vid
        self._key.append(key)
        self._depth.append(depth)
        self._trunc1.append(t1)
        return vid

    def depth(self, vid):
        return self._depth[vid]

    def degree(self, vid):
        return self._key[vid][0]

    def children(self, vid):
        return self._key[vid][1]

    def trunc(self, vid, h):
        """Id of the same view truncated to depth h <= depth(vid)."""
        d = self._depth[vid]
        if h > d:
            raise ValueError(f"cannot truncate depth-{d} view to depth {h}")
        while d > h:
            vid = self._trunc1[vid]
            d -= 1
        return vid

    def compare(self, a, b):
        """Canonical order (-1/0/1) on two ids of equal-depth views.

        Realizes the DFS lexicographic order: degree first, then children in
        increasing port order, each child by (far port, subtree).  Agrees
        with byte order of canonical_encode.
        """
        if a == b:
            return 0
        key = (a, b)
        got = self._cmp.get(key)
        if got is not None:
            return got
        da, ca = self._key[a]
        db, cb = self._key[b]
        if da != db:
            result = -1 if da < db else 1
        else:
            result = 0
            for (p1, q1, c1), (p2, q2, c2) in zip(ca, cb):
                if p1 != p2:
                    result = -1 if p1 < p2 else 1
                    break
                if q1 != q2:
                    result = -1 if q1 < q2 else 1
                    break
                if c1 != c2:
                    result = self.compare(c1, c2)
                    break
        self._cmp[key] = result
        self._cmp[(b, a)] = -result
        return result

    def min_id(self, ids):
        """Canonically smallest id among equal-depth view ids."""
        best = None
        for vid in ids:
            if best is None or self.compare(vid, best) < 0:
                best = vid
        return best

    def from_tree(self, view):
        """Intern an explicit ViewTree."""
        if not view.children:
            return self.leaf(view.degree)
        return self._intern(
            view.degree,
            tuple((p, q, self.from_tree(sub)) for p, q, sub in view.children),
        )

    def to_tree(self, vid):
        """Expand an id back into an explicit (shared-subtree) ViewTree."""
        memo = {}

        def build(i):
            got = memo.get(i)
            if got is None:
                deg, children = self._key[i]
                got = ViewTree(
                    deg,
                    tuple((p, q, build(c)) for p, q, c in children),
                    self._depth[i],
                )
                memo[i] = got
            return got

        return build(vid)

    def encode(self, vid):
        """canonical_encode of the id's tree (exponential; small views only)."""
        memo = {}

        def enc(i):
            got = memo.get(i)
            if got is None:
                deg, children = self._key[i]
                if not children:
                    got = b"\x01" + deg.to_bytes(4, "big")
                else:
                    parts = [b"\x02", deg.to_bytes(4, "big")]
                    for p, q, c in children:
                        parts.append(p.to_bytes(4, "big"))
                        parts.append(q.to_bytes(4, "big"))
                        parts.append(enc(c))
                    got = b"".join(parts)
                memo[i] = got
            return got

        return enc(vid)

    def decode(self, data):
        """Parse canonical_encode bytes back into an interned id."""
        vid, offset = self._decode_at(data, 0)
        if offset != len(data):
            raise ValueError(f"{len(data) - offset} trailing bytes after view")
        return vid

    def _decode_at(self, data, offset):
        tag = data[offset]
        degree = int.from_bytes(data[offset + 1 : offset + 5], "big")
        offset += 5
        if tag == 0x01:
            return self.leaf(degree), offset
        if tag != 0x02:
            raise ValueError(f"bad view tag 0x{tag:02x} at offset {offset - 5}")
        children = []
        for _ in range(degree):
            p = int.from_bytes(data[offset : offset + 4], "big")
            q = int.from_bytes(data[offset + 4 : offset + 8], "big")
            child, offset = self._decode_at(data, offset + 8)
            children.append((p, q, child))
        return self._intern(degree, tuple(children)), offset


# --- partitions -------------------------------------------------------------


@dataclass
class Partition:
    """Nodes grouped by equality of depth-t views.

    classes are frozensets sorted by smallest member; class_views holds the
    interned view id of each class.  sigma (the common class size of the
    stable partition) is set only when depth >= the stabilization depth.
    """

    depth: int
    classes: tuple
    class_views: tuple
    sigma: int | None = None

    def __len__(self):
        return len(self.classes)

    def class_of(self, u):
        for i, cls in enumerate(self.classes):
            if u in cls:
                return i
        raise KeyError(u)


def depth0_colors(g, interner):
    return [interner.leaf(g.degree(u)) for u in range(g.n)]


def refine_step(g, colors, interner):
    """One refinement round: colors for ~_t in, colors for ~_{t+1} out.

    The new key of u is (deg(u), per-port (q, color of the neighbor through
    p)), i.e. exactly the intern key of u's one-deeper view, so iterating
    from depth-0 colors yields the same ids the simulator's COM rounds build.
    """
    return [
        interner.node(
            g.degree(u),
            tuple((p, q, colors[v]) for p, v, q in g.port_items(u)),
        )
        for u in range(g.n)
    ]


def _group(colors):
    groups = {}
    for u, c in enumerate(colors):
        groups.setdefault(c, []).append(u)
    classes = sorted(groups.values(), key=lambda nodes: nodes[0])
    return (
        tuple(frozenset(nodes) for nodes in classes),
        tuple(colors[nodes[0]] for nodes in classes),
    )


def partition_at_depth(g, t, interner=None):
    """The partition of nodes by depth-t view equality."""
    interner = interner or ViewInterner()
    colors = depth0_colors(g, interner)
    for _ in range(t):
        colors = refine_step(g, colors, interner)
    classes, views = _group(colors)
    return Partition(t, classes, views)


def _refine_to_stable(g, interner):
    """Refine until the class count repeats; returns (colors per depth, Λ).

    Justified by the stabilization propositions: once |Π_t| = |Π_{t+1}| the
    partition never changes again, so the first repeat is the full partition.
    """
    colors = depth0_colors(g, interner)
    history = [colors]
    count = len(set(colors))
    while True:
        colors = refine_step(g, history[-1], interner)
        history.append(colors)
        new_count = len(set(colors))
        if new_count == count:
            return history, len(history) - 2
        count = new_count


def stabilization_depth(g):
    """Λ: the smallest t with Π_t = Π_{t+1}."""
    _, lam_stab = _refine_to_stable(g, ViewInterner())
    return lam_stab


def full_partition(g, interner=None):
    """The stable partition Π (all classes have the common size σ)."""
    interner = interner or ViewInterner()
    history, lam_stab = _refine_to_stable(g, interner)
    classes, views = _group(history[lam_stab])
    sizes = {len(c) for c in classes}
    if len(sizes) != 1:
        raise AssertionError(f"stable partition has unequal class sizes {sizes}")
    return Partition(lam_stab, classes, views, sigma=sizes.pop())


def level_of_symmetry(g):
    """λ: the smallest depth at which some view class is already a full class.

    Equivalently the smallest t at which some class of the depth-t partition
    has the stable class size σ; for solvable graphs, the smallest depth at
    which some node's view is unique.
    """
    interner = ViewInterner()
    history, lam_stab = _refine_to_stable(g, interner)
    sigma = full_partition(g, interner).sigma
    for t, colors in enumerate(history):
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        if any(s == sigma for s in sizes.values()):
            return t
    raise AssertionError("no class ever reaches size sigma")


def sigma(g):
    return full_partition(g).sigma


def is_solvable(g):
    """Leader election is possible iff all views become distinct (σ = 1).

    Depth n-1 always decides view equality, and refinement is stopped at
    the first repeated class count, which occurs no later than that.
    (Sharper truncation bounds exist for small-diameter graphs; they are
    not needed at this scale.)
    """
    return full_partition(g).sigma == 1


# --- view-DAG helpers (shared by oracles and node programs) -----------------


def level_sets(interner, root, max_depth):
    """Distinct subview ids at each tree depth 0..max_depth of the view `root`.

    Tree nodes at depth d of a view are length-d walks; their subviews are
    what this returns, deduplicated, one set per depth.
    """
    levels = [{root}]
    for _ in range(max_depth):
        nxt = set()
        for vid in levels[-1]:
            for _, _, c in interner.children(vid):
                nxt.add(c)
        levels.append(nxt)
    return levels


def distinct_views(interner, levels, up_to_depth, h):
    """Set of depth-h truncations of all subviews at tree depths <= up_to_depth."""
    out = set()
    for d in range(up_to_depth + 1):
        for vid in levels[d]:
            out.add(interner.trunc(vid, h))
    return out


def min_view_path(interner, root, h, max_depth):
    """Smallest (length, port sequence) path to a tree node whose depth-h
    subview is canonically smallest among all tree nodes at depth <= max_depth.

    Returns (path tuple, winning depth-h view id).  The root wins with the
    empty path when its own truncated view is the smallest.
    """
    levels = level_sets(interner, root, max_depth)
    target = interner.min_id(
        {interner.trunc(vid, h) for level in levels for vid in level}
    )
    frontier = {root: ()}
    for _ in range(max_depth + 1):
        hits = [path for vid, path in frontier.items() if interner.trunc(vid, h) == target]
        if hits:
            return min(hits), target
        nxt = {}
        for vid, path in frontier.items():
            for p, _, c in interner.children(vid):
                cand = path + (p,)
                cur = nxt.get(c)
                if cur is None or cand < cur:
                    nxt[c] = cand
        frontier = nxt
    raise AssertionError("smallest view not reached within max_depth")


# --- quotient-graph reconstruction ------------------------------------------


def reconstruct_quotient(view, n, interner=None):
    """Rebuild a graph isomorphic to the source from one sufficiently deep view.

    Searches for depths (j, h) with j + h + 1 <= depth(view) such that the
    tree nodes at depth <= j show exactly n distinct depth-h subviews; the
    +1 of slack guarantees every representative's children still have
    depth-h views, which is what makes the edge extraction well-defined.
    Returns None when no such pair exists yet ("NotYet").
    """
    if interner is None:
        interner = ViewInterner()
    root = view if isinstance(view, int) else interner.from_tree(view)
    i = interner.depth(root)
    levels = level_sets(interner, root, i - 1 if i > 0 else 0)
    for j in range(0, i):
        for h in range(0, i - j):
            seen = distinct_views(interner, levels, j, h)
            if len(seen) == n:
                return reconstruct_with(interner, root, j, h, n)
    return None


def reconstruct_with(interner, root, j, h, n):
    """Extract the quotient graph once (j, h) is known to expose n classes.

    Vertices are the n depth-h view classes ordered canonically; each class's
    shallowest representative contributes its incident edges, and every other
    representative is checked for agreement (disagreement means the caller
    broke the contract, e.g. fed an unsolvable graph).
    """
    if j + h + 1 > interner.depth(root):
        raise ValueError("need j + h + 1 <= view depth for reconstruction")
    levels = level_sets(interner, root, j)
    rep = {}
    for d in range(j + 1):
        for vid in levels[d]:
            cls = interner.trunc(vid, h)
            rep.setdefault(cls, vid)
    if len(rep) != n:
        raise ReconstructionError(f"expected {n} view classes, found {len(rep)}")
    order = sorted(rep, key=lambda c: _CmpKey(interner, c))
    index = {cls: i for i, cls in enumerate(order)}

    def edges_of(vid):
        out = set()
        for p, q, child in interner.children(vid):
            out.add((p, q, index[interner.trunc(child, h)]))
        return out

    edge_sets = {}
    for d in range(j + 1):
        for vid in levels[d]:
            cls = interner.trunc(vid, h)
            found = edges_of(vid)
            prior = edge_sets.get(cls)
            if prior is None:
                edge_sets[cls] = found
            elif prior != found:
                raise ReconstructionError(
                    "view-class representatives disagree on incident edges"
                )
    edges = set()
    for cls, incident in edge_sets.items():
        u = index[cls]
        for p, q, v in incident:
            if u <= v:
                edges.add((u, p, v, q))
            else:
                edges.add((v, q, u, p))
    g = PortGraph(n, sorted(edges))
    report = validate_graph(g)
    if not report.ok:
        raise ReconstructionError(
            "reconstructed edge set is not a valid port graph: "
            + "; ".join(report.problems)
        )
    return g


class _CmpKey:
    """functools-free comparison key adapter over ViewInterner.compare."""

    __slots__ = ("interner", "vid")

    def __init__(self, interner, vid):
        self.interner = interner
        self.vid = vid

    def __lt__(self, other):
        return self.interner.compare(self.vid, other.vid) < 0


# --- distinguishing paths ----------------------------------------------------


def node_type(g, u):
    """Type letter of a labeled node: first alphabetic character of its label."""
    tag = g.labels.get(u)
    if tag is None:
        raise ValueError(f"node {u} carries no type label")
    return tag[0]


def shortest_distinguishing_path(g, x, y, cap=None):
    """Minimum-length port sequence whose walked type sequences differ.

    The type sequence includes the start node, so differing types at x and y
    give the empty path.  Ports are tried in increasing order, so among the
    shortest witnesses the port-lexicographic least is returned.  Returns
    None when no path up to the cap (default 2n) distinguishes.
    """
    if x == y:
        raise ValueError("need two distinct nodes")
    for u in range(g.n):
        node_type(g, u)
    if cap is None:
        cap = 2 * g.n
    if node_type(g, x) != node_type(g, y):
        return ()
    frontier = {(x, y): ()}
    seen = {(x, y)}
    for _ in range(cap):
        nxt = {}
        for (a, b), path in sorted(frontier.items(), key=lambda kv: kv[1]):
            top = max(g.degree(a), g.degree(b))
            for p in range(top):
                hop_a = g.step(a, p)
                hop_b = g.step(b, p)
                if hop_a is None and hop_b is None:
                    continue
                if hop_a is None or hop_b is None:
                    return path + (p,)
                a2, b2 = hop_a[0], hop_b[0]
                if node_type(g, a2) != node_type(g, b2):
                    return path + (p,)
                key = (a2, b2)
                if key not in seen:
                    seen.add(key)
                    cand = path + (p,)
                    cur = nxt.get(key)
                    if cur is None or cand < cur:
                        nxt[key] = cand
        if not nxt:
            return None
        frontier = nxt
    return None
