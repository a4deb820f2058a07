"""The four leader-election node programs and the outcome verifier.

All four share one election rule: grow the own view until the right depth
is known, then point at the tree node carrying the canonically smallest
view at that depth, choosing the smallest (length, port sequence) path.
On a solvable graph every tree occurrence of the winning view names the
same graph node, so all programs agree.

Knowledge requirements: the diameter variant needs D, the size variants
need n, the strong size-and-diameter variant needs both.  The two strong
variants additionally recognize unsolvable graphs and report that election
is impossible; the weak variants are unconstrained there (this
implementation elects garbage that the harness verifier flags, and the
size variant fails loudly if its reconstruction comes out inconsistent).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import diameter as graph_diameter
from .sim import (
    IMPOSSIBLE,
    LEADER,
    NONLEADER,
    Decision,
    Knowledge,
    ViewProgram,
    run_sync,
)
from .views import (
    distinct_views,
    is_solvable,
    level_sets,
    min_view_path,
    reconstruct_with,
    stabilization_depth,
)


class _ElectBase(ViewProgram):
    """Shared helpers: partition-class counting and the election rule."""

    def _levels(self, max_depth):
        return level_sets(self.ctx.views, self.state, max_depth)

    def _count_classes(self, levels, up_to_depth, h):
        """Number of distinct depth-h views among tree nodes within
        up_to_depth of the root; equals the class count of the depth-h
        partition whenever every graph node appears that close."""
        return len(distinct_views(self.ctx.views, levels, up_to_depth, h))

    def _elect(self, h, max_depth):
        """Decide by the common rule: smallest depth-h view, least path."""
        path, _ = min_view_path(self.ctx.views, self.state, h, max_depth)
        if path:
            self.decision = Decision(NONLEADER, path)
        else:
            self.decision = Decision(LEADER)


class WleKnownDiameter(_ElectBase):
    """Weak election for graphs of known diameter D.

    COM until depth D, then one COM per refinement depth until the class
    count repeats; at that point the smallest stabilized view is unique on
    a solvable graph.  Always D+Lambda+1 COM calls.
    """

    name = "wle-diam"

    def __init__(self, degree, knowledge, ctx):
        super().__init__(degree, knowledge, ctx)
        if knowledge.D is None:
            raise ValueError("wle-diam needs the diameter")
        self.D = knowledge.D
        self._counts = []
        if self.D == 0:
            self.decision = Decision(LEADER)
            self.halt()

    def on_view(self):
        i = self.depth
        if i < self.D:
            return
        j = i - self.D
        levels = self._levels(self.D)
        self._counts.append(self._count_classes(levels, self.D, j))
        if j >= 1 and self._counts[j] == self._counts[j - 1]:
            self._finish(j - 1)

    def _finish(self, stable_depth):
        self._elect(stable_depth, self.D)
        self.halt()


class SleKnownSizeAndDiameter(WleKnownDiameter):
    """Strong election for graphs of known size and diameter.

    Identical round structure to the diameter variant, plus the size test:
    the stabilized class count is the number of distinct full views, which
    equals n exactly on solvable graphs.
    """

    name = "sle-size-diam"

    def __init__(self, degree, knowledge, ctx):
        if knowledge.n is None or knowledge.D is None:
            raise ValueError("sle-size-diam needs both size and diameter")
        super().__init__(degree, knowledge, ctx)

    def _finish(self, stable_depth):
        if self._counts[stable_depth] < self.knowledge.n:
            self.decision = Decision(IMPOSSIBLE)
            self.halt()
        else:
            super()._finish(stable_depth)


class SleKnownSize(_ElectBase):
    """Strong election for graphs of known size n, in exactly 2n-2 COM calls.

    A depth-(2n-2) view contains every node's depth-(n-1) view; there are n
    distinct ones iff election is possible at all.
    """

    name = "sle-size"

    def __init__(self, degree, knowledge, ctx):
        super().__init__(degree, knowledge, ctx)
        if knowledge.n is None:
            raise ValueError("sle-size needs the size")
        self.n = knowledge.n
        if self.n == 1:
            self.decision = Decision(LEADER)
            self.halt()

    def on_view(self):
        if self.depth < 2 * self.n - 2:
            return
        radius = self.n - 1
        levels = self._levels(radius)
        if self._count_classes(levels, radius, radius) < self.n:
            self.decision = Decision(IMPOSSIBLE)
        else:
            self._elect(radius, radius)
        self.halt()


class WleKnownSize(_ElectBase):
    """Weak election for graphs of known size n in O(D + lambda) COM calls.

    Grow the view until some ball of tree depth j shows n distinct views at
    the complementary depth; one extra COM call of slack then makes the
    quotient-graph reconstruction well-defined, from which D and Lambda are
    computed and the common election rule applied.  Every node runs a
    uniform D+Lambda+2 COM calls so late nodes are never starved.
    """

    name = "wle-size"

    def __init__(self, degree, knowledge, ctx):
        super().__init__(degree, knowledge, ctx)
        if knowledge.n is None:
            raise ValueError("wle-size needs the size")
        self.n = knowledge.n
        self._phase = "grow"
        self._j = None
        self._total = None
        if self.n == 1:
            self.decision = Decision(LEADER)
            self.halt()

    def on_view(self):
        i = self.depth
        if self._phase == "grow":
            j = self._find_full_ball(i)
            if j is not None:
                self._j = j
                self._phase = "slack"
            return
        if self._phase == "slack":
            views = self.ctx.views
            h = (i - 1) - self._j
            quotient = reconstruct_with(views, self.state, self._j, h, self.n)
            d = graph_diameter(quotient)
            stable = stabilization_depth(quotient)
            self._elect(stable, i - stable)
            self._total = d + stable + 2
            self._phase = "linger"
        if self.depth >= self._total:
            self.halt()

    def _find_full_ball(self, i):
        """Smallest tree depth j whose ball already shows n distinct views
        at depth i-j, or None."""
        views = self.ctx.views
        levels = self._levels(i)
        cumulative = set()
        for j in range(i + 1):
            cumulative |= levels[j]
            if len(cumulative) < self.n:
                continue
            h = i - j
            if len({views.trunc(v, h) for v in cumulative}) == self.n:
                return j
        return None


ALGORITHMS = {
    WleKnownDiameter.name: WleKnownDiameter,
    WleKnownSize.name: WleKnownSize,
    SleKnownSize.name: SleKnownSize,
    SleKnownSizeAndDiameter.name: SleKnownSizeAndDiameter,
}

KNOWLEDGE_NEEDS = {
    WleKnownDiameter.name: ("D",),
    WleKnownSize.name: ("n",),
    SleKnownSize.name: ("n",),
    SleKnownSizeAndDiameter.name: ("n", "D"),
}


def elect(g, algorithm, knowledge=None, round_cap=None, explicit_wire=False):
    """Run one of the four algorithms by name with auto-filled knowledge."""
    cls = ALGORITHMS[algorithm]
    needs = KNOWLEDGE_NEEDS[algorithm]
    if knowledge is None:
        knowledge = Knowledge(
            n=g.n if "n" in needs else None,
            D=graph_diameter(g) if "D" in needs else None,
        )
    return run_sync(g, cls, knowledge, round_cap=round_cap, explicit_wire=explicit_wire)


@dataclass
class VerificationReport:
    problems: list = field(default_factory=list)
    leader: int | None = None

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok


def round_bound(algorithm, n, d, stable):
    """COM-call bound each algorithm promises (exact for the slow one)."""
    if algorithm == SleKnownSize.name:
        return 2 * n - 2
    if algorithm == WleKnownSize.name:
        return d + stable + 2
    return d + stable + 1


def verify_outcome(g, transcript):
    """Check a transcript against the graph: leader uniqueness, path
    validity, verdict soundness, and the round bound.  Report-style."""
    report = VerificationReport()
    solvable = is_solvable(g)
    if transcript.timed_out:
        report.problems.append("run timed out before all nodes decided")
        return report
    kinds = {}
    for u, d in enumerate(transcript.decisions):
        if d is None:
            report.problems.append(f"node {u} never decided")
            return report
        kinds.setdefault(d.kind, []).append(u)
    impossibles = kinds.get(IMPOSSIBLE, [])
    leaders = kinds.get(LEADER, [])
    if impossibles:
        if len(impossibles) != g.n:
            report.problems.append(
                f"{len(impossibles)} of {g.n} nodes reported impossible"
            )
        if solvable:
            report.problems.append("nodes reported impossible on a solvable graph")
    else:
        if len(leaders) != 1:
            report.problems.append(f"expected exactly one leader, got {len(leaders)}")
        else:
            report.leader = leaders[0]
            for u in kinds.get(NONLEADER, []):
                path = transcript.decisions[u].path
                try:
                    end = g.walk(u, path)
                except ValueError as exc:
                    report.problems.append(f"node {u}: invalid path ({exc})")
                    continue
                if end != report.leader:
                    report.problems.append(
                        f"node {u}: path ends at {end}, not the leader"
                    )
        if not solvable and transcript.algorithm in (
            SleKnownSize.name,
            SleKnownSizeAndDiameter.name,
        ):
            report.problems.append(
                "strong algorithm elected a leader on an unsolvable graph"
            )
    d = graph_diameter(g)
    stable = stabilization_depth(g)
    bound = round_bound(transcript.algorithm, g.n, d, stable)
    if transcript.algorithm == SleKnownSize.name:
        if transcript.rounds != bound:
            report.problems.append(
                f"expected exactly {bound} COM calls, measured {transcript.rounds}"
            )
    elif transcript.rounds > bound:
        report.problems.append(
            f"round bound exceeded: {transcript.rounds} > {bound}"
        )
    return report
