"""Port-labeled graphs: representation, validation, metrics, and text I/O.

A port graph is an undirected connected simple graph in which every node of
degree d labels its incident edges with the ports 0..d-1.  The two endpoints
of an edge carry independent port numbers.  Node ids 0..n-1 exist only for
the test harness and the serializer; anonymous node programs never see them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Malformed anongraph text; carries the offending line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PortGraph:
    """Immutable port-labeled graph.

    Edges are quadruples (u, p, v, q): the edge joins u and v, has port p at
    u and port q at v.  Edges are canonicalized to u < v and kept sorted by
    (u, p), so structural equality is plain tuple equality.
    """

    __slots__ = ("n", "edges", "labels", "_ports")

    def __init__(self, n, edges, labels=None):
        self.n = n
        canon = []
        for u, p, v, q in edges:
            if u > v:
                u, p, v, q = v, q, u, p
            canon.append((u, p, v, q))
        canon.sort()
        self.edges = tuple(canon)
        self.labels = dict(labels) if labels else {}
        ports = [{} for _ in range(n)]
        for u, p, v, q in self.edges:
            if 0 <= u < n and 0 <= v < n:
                ports[u][p] = (v, q)
                ports[v][q] = (u, p)
        self._ports = ports

    def degree(self, u):
        return len(self._ports[u])

    def step(self, u, p):
        """One hop from u through port p: (neighbor, arrival port), or None."""
        return self._ports[u].get(p)

    def port_items(self, u):
        """Incident edges of u as a list [(p, v, q)] sorted by port."""
        return [(p, v, q) for p, (v, q) in sorted(self._ports[u].items())]

    def walk(self, u, path):
        """Follow a sequence of outgoing ports from u; returns the end node.

        Raises ValueError if some port is absent at an intermediate node.
        """
        node = u
        for p in path:
            hop = self.step(node, p)
            if hop is None:
                raise ValueError(f"port {p} does not exist at node {node}")
            node = hop[0]
        return node

    def relabel(self, perm):
        """Renumber nodes by perm (old id -> new id), ports untouched."""
        edges = [(perm[u], p, perm[v], q) for u, p, v, q in self.edges]
        labels = {perm[u]: tag for u, tag in self.labels.items()}
        return PortGraph(self.n, edges, labels)

    def __eq__(self, other):
        return (
            isinstance(other, PortGraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"PortGraph(n={self.n}, m={len(self.edges)})"


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok


def validate_graph(g):
    """Check every port-graph invariant; returns a report, never raises.

    Reported problems: endpoint out of range, self-loop, duplicate edge,
    duplicate or out-of-range port at a node, port-set gap, disconnected.
    """
    report = ValidationReport()
    seen_pairs = set()
    port_use = [set() for _ in range(g.n)]
    for u, p, v, q in g.edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            report.problems.append(f"edge ({u},{p},{v},{q}): endpoint out of range")
            continue
        if u == v:
            report.problems.append(f"edge ({u},{p},{v},{q}): self-loop at node {u}")
            continue
        if (u, v) in seen_pairs:
            report.problems.append(f"duplicate edge between nodes {u} and {v}")
        seen_pairs.add((u, v))
        for node, port in ((u, p), (v, q)):
            if port in port_use[node]:
                report.problems.append(f"port {port} used twice at node {node}")
            port_use[node].add(port)
    for node in range(g.n):
        d = len(port_use[node])
        expected = set(range(d))
        if port_use[node] != expected:
            extra = sorted(port_use[node] - expected)
            missing = sorted(expected - port_use[node])
            report.problems.append(
                f"node {node}: ports must be 0..{d - 1}, "
                f"extra={extra} missing={missing}"
            )
    if g.n > 0 and not report.problems:
        if len(_bfs_order(g, 0)) != g.n:
            report.problems.append("graph is not connected")
    return report


def _bfs_order(g, start):
    seen = [False] * g.n
    seen[start] = True
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for _, v, _ in g.port_items(u):
            if not seen[v]:
                seen[v] = True
                order.append(v)
                queue.append(v)
    return order


def bfs_distances(g, start):
    """Hop distances from start; unreachable nodes get -1."""
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for _, v, _ in g.port_items(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def eccentricity(g, u):
    dist = bfs_distances(g, u)
    if min(dist) < 0:
        raise ValueError("graph is not connected")
    return max(dist)


def diameter(g):
    """Max over node pairs of shortest-path hop distance (BFS from each node)."""
    if g.n == 0:
        raise ValueError("empty graph has no diameter")
    return max(eccentricity(g, u) for u in range(g.n))


def port_isomorphism(g1, g2, max_n=9):
    """Brute-force port-preserving isomorphism (test oracle, tiny graphs only).

    Returns a node mapping list or None.  A mapping f is port-preserving when
    (u,p,v,q) is an edge of g1 iff (f(u),p,f(v),q) is an edge of g2.
    """
    from itertools import permutations

    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if g1.n > max_n:
        raise ValueError(f"port_isomorphism is exponential; n={g1.n} exceeds {max_n}")
    target = set((u, p, v, q) for u, p, v, q in g2.edges)
    degs1 = sorted(g1.degree(u) for u in range(g1.n))
    degs2 = sorted(g2.degree(u) for u in range(g2.n))
    if degs1 != degs2:
        return None
    for perm in permutations(range(g1.n)):
        ok = True
        for u, p, v, q in g1.edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, p2, b, q2 = b, q, a, p
            else:
                p2, q2 = p, q
            if (a, p2, b, q2) not in target:
                ok = False
                break
        if ok:
            return list(perm)
    return None


# --- anongraph v1 text format ---------------------------------------------
#
#   anongraph v1
#   n <count>
#   edge <u> <p> <v> <q>     (u < v, sorted by (u, p))
#   label <u> <tag>          (optional, sorted by u, tag has no whitespace)
#
# '#' lines are comments (parser only); blank lines are ignored.


def serialize_graph(g):
    """Render g in the anongraph v1 format (LF endings, deterministic order)."""
    lines = ["anongraph v1", f"n {g.n}"]
    for u, p, v, q in sorted(g.edges):
        lines.append(f"edge {u} {p} {v} {q}")
    for u in sorted(g.labels):
        tag = g.labels[u]
        if any(ch.isspace() for ch in tag):
            raise ValueError(f"label for node {u} contains whitespace: {tag!r}")
        lines.append(f"label {u} {tag}")
    return "\n".join(lines) + "\n"


def parse_graph(text):
    """Parse anongraph v1 text (str or bytes) into a PortGraph.

    Raises GraphFormatError with a line number for malformed input,
    duplicate edges, or duplicate port use.  Port-set gaps are validated
    after parsing.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    n = None
    edges = []
    labels = {}
    seen_header = False
    seen_pairs = set()
    seen_ports = set()
    section = "header"
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split(" ")
        if not seen_header:
            if line != "anongraph v1":
                raise GraphFormatError("expected header 'anongraph v1'", lineno)
            seen_header = True
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError("expected 'n <count>'", lineno)
            n = _int_token(tokens[1], lineno)
            if n < 0:
                raise GraphFormatError("node count must be nonnegative", lineno)
            continue
        if tokens[0] == "edge":
            if section == "labels":
                raise GraphFormatError("edge line after label lines", lineno)
            if len(tokens) != 5:
                raise GraphFormatError("expected 'edge <u> <p> <v> <q>'", lineno)
            u, p, v, q = (_int_token(t, lineno) for t in tokens[1:])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge endpoint out of range 0..{n - 1}", lineno)
            if u == v:
                raise GraphFormatError("self-loop is illegal", lineno)
            if u > v:
                raise GraphFormatError("edge must list the smaller node first", lineno)
            if (u, v) in seen_pairs:
                raise GraphFormatError(f"duplicate edge between {u} and {v}", lineno)
            seen_pairs.add((u, v))
            for node, port in ((u, p), (v, q)):
                if port < 0:
                    raise GraphFormatError("port numbers must be nonnegative", lineno)
                if (node, port) in seen_ports:
                    raise GraphFormatError(f"port {port} used twice at node {node}", lineno)
                seen_ports.add((node, port))
            edges.append((u, p, v, q))
        elif tokens[0] == "label":
            section = "labels"
            if len(tokens) != 3:
                raise GraphFormatError("expected 'label <u> <tag>'", lineno)
            u = _int_token(tokens[1], lineno)
            if not 0 <= u < n:
                raise GraphFormatError("label node out of range", lineno)
            if u in labels:
                raise GraphFormatError(f"duplicate label for node {u}", lineno)
            labels[u] = tokens[2]
        else:
            raise GraphFormatError(f"unknown directive {tokens[0]!r}", lineno)
    if not seen_header:
        raise GraphFormatError("empty input, expected 'anongraph v1' header")
    if n is None:
        raise GraphFormatError("missing 'n <count>' line")
    g = PortGraph(n, edges, labels)
    report = validate_graph(g)
    if not report.ok:
        raise GraphFormatError("; ".join(report.problems))
    return g


def _int_token(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def load_graph(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def save_graph(g, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_graph(g))
