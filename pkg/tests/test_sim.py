import pytest

from anonet.families import random_port_graph, symmetric_clique
from anonet.graph import PortGraph
from anonet.sim import (
    Decision,
    Knowledge,
    LEADER,
    NONLEADER,
    SimContractError,
    SimContext,
    ViewProgram,
    absorb,
    com_round,
    run_sync,
)
from anonet.views import canonical_encode, view_at_depth


def p3():
    return PortGraph(3, [(0, 0, 1, 0), (1, 1, 2, 0)])


class Grow(ViewProgram):
    """Test-only program: COM a fixed number of rounds, then stop."""

    name = "grow"
    rounds = 3

    def on_view(self):
        if self.depth >= self.rounds:
            self.decision = Decision(LEADER)
            self.halt()

    @classmethod
    def upto(cls, r):
        return type(f"Grow{r}", (cls,), {"rounds": r})


def test_com_round_sends_view_on_every_port():
    ctx = SimContext()
    state = ctx.views.leaf(4)
    out = com_round(ctx, state, 4)
    assert sorted(out) == [0, 1, 2, 3]
    assert all(ctx.unpack(msg) == (state, p) for p, msg in out.items())


def test_absorb_builds_the_one_deeper_view():
    g = p3()
    ctx = SimContext()
    left = ctx.views.leaf(1)
    right = ctx.views.leaf(1)
    inbox = {0: ctx.pack(left, 0), 1: ctx.pack(right, 0)}
    merged = absorb(ctx, inbox, 2)
    oracle = ctx.views.from_tree(view_at_depth(g, 1, 1))
    assert merged == oracle


def test_absorb_missing_port_is_contract_error():
    ctx = SimContext()
    with pytest.raises(SimContractError):
        absorb(ctx, {0: ctx.pack(ctx.views.leaf(1), 0)}, 2)


def test_states_equal_explicit_views():
    # after r rounds a node holds exactly its depth-r view
    for seed in range(6):
        g = random_port_graph(6, 0.4, 50 + seed)
        for r in (1, 2, 4):
            states = []

            class Capture(Grow.upto(r)):
                def on_view(self):
                    super().on_view()
                    if self.halted:
                        states.append((self.ctx, self.state))

            tr = run_sync(g, Capture, Knowledge())
            assert tr.rounds == r
            got = sorted(ctx.views.encode(vid) for ctx, vid in states)
            want = sorted(canonical_encode(view_at_depth(g, u, r)) for u in range(g.n))
            assert got == want


def test_transcripts_are_deterministic():
    g = random_port_graph(8, 0.4, 11)
    a = run_sync(g, Grow, Knowledge())
    b = run_sync(g, Grow, Knowledge())
    assert a.to_csv() == b.to_csv()
    assert a.round_bytes == b.round_bytes


def test_knowledge_is_validated():
    g = p3()
    with pytest.raises(ValueError):
        run_sync(g, Grow, Knowledge(n=4))
    with pytest.raises(ValueError):
        run_sync(g, Grow, Knowledge(D=3))
    run_sync(g, Grow, Knowledge(n=3, D=2))


def test_rogue_port_is_a_contract_violation():
    class Rogue(ViewProgram):
        name = "rogue"

        def outgoing(self):
            return {self.degree + 3: self.ctx.pack(self.state, 0)}

        def on_view(self):
            pass

    with pytest.raises(SimContractError):
        run_sync(p3(), Rogue, Knowledge())


def test_round_cap_times_out():
    class Forever(ViewProgram):
        name = "forever"

        def on_view(self):
            pass

    tr = run_sync(p3(), Forever, Knowledge(), round_cap=5)
    assert tr.timed_out
    assert tr.rounds == 5
    assert tr.decisions == [None, None, None]


def test_decision_constructor_contract():
    with pytest.raises(ValueError):
        Decision(NONLEADER)
    with pytest.raises(ValueError):
        Decision(LEADER, (0,))


def test_transcript_csv_shape():
    tr = run_sync(p3(), Grow, Knowledge())
    lines = tr.to_csv().strip().split("\n")
    assert lines[0] == "node,decision,path,termination_round"
    assert len(lines) == 5  # header + 3 nodes + summary
    assert lines[-1].startswith("summary,grow,3,")


def test_explicit_wire_matches_reference_wire():
    g = symmetric_clique(2)
    a = run_sync(g, Grow, Knowledge())
    b = run_sync(g, Grow, Knowledge(), explicit_wire=True)
    assert a.decisions == b.decisions
    assert a.rounds == b.rounds
    assert sum(b.round_bytes) > sum(a.round_bytes)


def test_degenerate_single_node():
    class Immediate(ViewProgram):
        name = "immediate"

        def __init__(self, degree, knowledge, ctx):
            super().__init__(degree, knowledge, ctx)
            if degree == 0:
                self.decision = Decision(LEADER)
                self.halt()

        def on_view(self):
            raise AssertionError("no rounds should run")

    tr = run_sync(PortGraph(1, []), Immediate, Knowledge())
    assert tr.rounds == 0
    assert tr.decisions[0].kind == LEADER
    assert tr.decided_round[0] == 0
