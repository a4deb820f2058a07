"""Synchronous round engine for anonymous node programs.

Each round every non-halted program hands the simulator one message per
port; messages cross their edge and arrive tagged with the far-side port,
exactly the information the model grants.  Programs are seeded with their
degree and the declared knowledge only; node identity stays harness-side.

A program's whole life is COM rounds: send the current view, absorb the
neighbors' views one level deeper.  Messages carry references into a
simulation-owned intern table by default (the reference deterministically
names the same content); a wire mode that ships full canonical encodings
exists for fidelity testing on small graphs.

Only the synchronous schedule is implemented.  The same executions can be
reproduced over asynchronous channels by stamping every message with its
round number and having nodes wait for all stamps of the current round;
that translation is out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import diameter as graph_diameter
from .views import ViewInterner

LEADER = "leader"
NONLEADER = "nonleader"
IMPOSSIBLE = "impossible"
TIMEOUT = "timeout"

_REF_MESSAGE_BYTES = 12  # 8-byte view reference + 4-byte sender port


class SimContractError(RuntimeError):
    """A node program broke the model contract (bad port, missing message)."""


@dataclass(frozen=True)
class Knowledge:
    """Numerical parameters granted to every node; must match the graph."""

    n: int | None = None
    D: int | None = None


@dataclass(frozen=True)
class Decision:
    kind: str
    path: tuple = ()

    def __post_init__(self):
        if self.kind == NONLEADER and not self.path:
            raise ValueError("a non-leader decision needs a nonempty path")
        if self.kind != NONLEADER and self.path:
            raise ValueError(f"{self.kind} decision carries no path")


@dataclass
class ElectionTranscript:
    """Everything the harness may inspect after a run.

    decisions[u] is None only on timeout.  rounds counts communication
    rounds executed; the r-th round carries every node's depth-(r-1) view,
    so `rounds` equals the number of COM calls each node performed.
    """

    algorithm: str
    knowledge: Knowledge
    n: int
    rounds: int = 0
    decisions: list = field(default_factory=list)
    decided_round: list = field(default_factory=list)
    round_bytes: list = field(default_factory=list)
    timed_out: bool = False

    def to_csv(self):
        """Fixed columns: node,decision,path,termination_round; one row per
        node, then a summary row: summary,<algorithm>,<rounds>,<total bytes>."""
        lines = ["node,decision,path,termination_round"]
        for u in range(self.n):
            d = self.decisions[u]
            kind = TIMEOUT if d is None else d.kind
            path = "-".join(str(p) for p in d.path) if d else ""
            r = self.decided_round[u]
            lines.append(f"{u},{kind},{path},{'' if r is None else r}")
        lines.append(
            f"summary,{self.algorithm},{self.rounds},{sum(self.round_bytes)}"
        )
        return "\n".join(lines) + "\n"


class SimContext:
    """Simulation-owned shared state handed to every program: the intern
    table plus the wire mode.  Programs may only read views they received."""

    def __init__(self, explicit_wire=False):
        self.views = ViewInterner()
        self.explicit_wire = explicit_wire

    def pack(self, vid, port):
        if self.explicit_wire:
            return (self.views.encode(vid), port)
        return (vid, port)

    def unpack(self, payload):
        body, port = payload
        if self.explicit_wire:
            return self.views.decode(body), port
        return body, port

    def wire_bytes(self, payload):
        body, _ = payload
        if self.explicit_wire:
            return len(body) + 4
        return _REF_MESSAGE_BYTES


def com_round(ctx, state, degree):
    """Outbox of one COM call: the current view on every port."""
    return {p: ctx.pack(state, p) for p in range(degree)}


def absorb(ctx, inbox, degree):
    """Merge per-port neighbor views into the one-deeper own view.

    inbox maps the local arrival port to a payload carrying the neighbor's
    view and the port it was sent through.
    """
    children = []
    for p in range(degree):
        if p not in inbox:
            raise SimContractError(f"no message arrived on port {p}")
        vid, q = ctx.unpack(inbox[p])
        children.append((p, q, vid))
    return ctx.views.node(degree, tuple(children))


class ViewProgram:
    """Base anonymous program: accumulate the own view via COM rounds.

    Subclasses implement on_view(), called after every absorb with the view
    depth equal to the number of COM calls performed, and must eventually
    set self.decision and call self.halt().
    """

    def __init__(self, degree, knowledge, ctx):
        self.degree = degree
        self.knowledge = knowledge
        self.ctx = ctx
        self.state = ctx.views.leaf(degree)
        self.depth = 0
        self.decision = None
        self._halted = False

    def halt(self):
        self._halted = True

    @property
    def halted(self):
        return self._halted

    def outgoing(self):
        if self._halted:
            return None
        return com_round(self.ctx, self.state, self.degree)

    def deliver(self, inbox):
        self.state = absorb(self.ctx, inbox, self.degree)
        self.depth += 1
        self.on_view()

    def on_view(self):
        raise NotImplementedError


def run_sync(g, program_cls, knowledge, round_cap=None, explicit_wire=False):
    """Run one anonymous program per node until all halt or the cap trips.

    The declared knowledge is validated against the graph before anything
    runs; the model assumes the knowledge is true.  Determinism: identical
    (graph, program, knowledge) yields identical transcripts.
    """
    if knowledge.n is not None and knowledge.n != g.n:
        raise ValueError(f"knowledge says n={knowledge.n}, graph has n={g.n}")
    if knowledge.D is not None:
        true_d = graph_diameter(g)
        if knowledge.D != true_d:
            raise ValueError(f"knowledge says D={knowledge.D}, graph has D={true_d}")
    if round_cap is None:
        round_cap = 4 * g.n + 4
    if round_cap < 1:
        raise ValueError("round_cap must be >= 1")
    ctx = SimContext(explicit_wire=explicit_wire)
    programs = [program_cls(g.degree(u), knowledge, ctx) for u in range(g.n)]
    transcript = ElectionTranscript(
        algorithm=getattr(program_cls, "name", program_cls.__name__),
        knowledge=knowledge,
        n=g.n,
        decisions=[None] * g.n,
        decided_round=[None] * g.n,
    )

    def record_decisions(round_no):
        for u, prog in enumerate(programs):
            if prog.decision is not None and transcript.decisions[u] is None:
                transcript.decisions[u] = prog.decision
                transcript.decided_round[u] = round_no

    record_decisions(0)
    while not all(p.halted for p in programs):
        if transcript.rounds >= round_cap:
            transcript.timed_out = True
            break
        outboxes = []
        for u, prog in enumerate(programs):
            out = prog.outgoing()
            if out:
                for p in out:
                    if g.step(u, p) is None:
                        raise SimContractError(
                            f"node program at {u} sent on nonexistent port {p}"
                        )
            outboxes.append(out or {})
        inboxes = [{} for _ in range(g.n)]
        total = 0
        for u, p, v, q in g.edges:
            if p in outboxes[u]:
                inboxes[v][q] = outboxes[u][p]
                total += ctx.wire_bytes(outboxes[u][p])
            if q in outboxes[v]:
                inboxes[u][p] = outboxes[v][q]
                total += ctx.wire_bytes(outboxes[v][q])
        transcript.rounds += 1
        transcript.round_bytes.append(total)
        for prog, inbox in zip(programs, inboxes):
            if not prog.halted:
                prog.deliver(inbox)
        record_decisions(transcript.rounds)
    return transcript
