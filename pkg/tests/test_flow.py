import random

import pytest

from dynamis import FlowNetwork, IncrementalFlow
from dynamis.errors import (
    MissingEdgeError,
    NotIncrementalError,
    ParallelEdgeError,
    SelfLoopError,
)
from dynamis.oracles import static_max_flow


def oracle(net):
    return static_max_flow(net.vertices(), net.directed_edges(), net.s, net.t)


def test_insert_direct_edge():
    net = FlowNetwork(2, 0, 1)
    delta = net.insert_edge(0, 1)
    assert delta.dF == 1 and net.F == 1


def test_insert_dead_end():
    net = FlowNetwork(3, 0, 2)
    delta = net.insert_edge(0, 1)
    assert delta.dF == 0 and net.F == 0


def test_diamond_second_route():
    net = FlowNetwork(4, 0, 3)
    for u, v in [(0, 1), (1, 3), (0, 2)]:
        net.insert_edge(u, v)
    assert net.F == 1
    delta = net.insert_edge(2, 3)
    assert delta.dF == 1 and net.F == 2 == oracle(net)


def test_rejections():
    net = FlowNetwork(3, 0, 2)
    with pytest.raises(SelfLoopError):
        net.insert_edge(1, 1)
    net.insert_edge(0, 1)
    with pytest.raises(ParallelEdgeError):
        net.insert_edge(0, 1)
    net.insert_edge(1, 0)  # anti-parallel is a distinct edge
    with pytest.raises(MissingEdgeError):
        net.delete_edge(0, 2)
    with pytest.raises(SelfLoopError):
        FlowNetwork(3, 1, 1)


def test_delete_non_flow_edge():
    net = FlowNetwork(4, 0, 3)
    net.insert_edge(0, 1)
    net.insert_edge(2, 3)
    before = net.meter.edges_touched
    net.delete_edge(2, 3)
    assert net.F == 0
    assert net.meter.edges_touched == before  # no search at all


def test_delete_reroutes_via_parallel_route():
    net = FlowNetwork(6, 0, 5)
    route_a = [(0, 1), (1, 2), (2, 5)]
    route_b = [(0, 3), (3, 4), (4, 5)]
    for u, v in route_a:
        net.insert_edge(u, v)
    assert net.F == 1
    for u, v in route_b:
        net.insert_edge(u, v)
    assert net.F == 2
    net.delete_edge(1, 2)
    assert net.F == 1 == oracle(net)
    assert net.verify()


def test_delete_sends_flow_back():
    net = FlowNetwork(3, 0, 2)
    net.insert_edge(0, 1)
    net.insert_edge(1, 2)
    assert net.F == 1
    delta = net.delete_edge(1, 2)
    assert delta.dF == -1 and net.F == 0
    assert net.flow[(0, 1)] == 0  # pushed back along the send-back cycle
    assert net.verify()


def test_verify_catches_conservation_break():
    net = FlowNetwork(3, 0, 2)
    net.insert_edge(0, 1)
    net.insert_edge(1, 2)
    net.flow[(0, 1)] = 0  # vertex 1 now creates flow
    assert not net.verify()


def test_verify_catches_submaximal_flow():
    net = FlowNetwork(2, 0, 1)
    net.insert_edge(0, 1)
    net.flow[(0, 1)] = 0
    net.F = 0
    assert not net.verify()  # s-t residual path exists


def test_incremental_first_edge_augments():
    inc = IncrementalFlow(2, 0, 1)
    delta = inc.insert_edge(0, 1)
    assert delta.dF == 1 and inc.F == 1
    assert inc.verify()


def test_incremental_unreachable_noop():
    inc = IncrementalFlow(4, 0, 3)
    inc.insert_edge(1, 2)
    assert 1 not in inc.in_tree and 2 not in inc.in_tree
    assert inc.F == 0


def test_incremental_rejects_deletion():
    inc = IncrementalFlow(3, 0, 2)
    inc.insert_edge(0, 1)
    with pytest.raises(NotIncrementalError):
        inc.delete_edge(0, 1)


@pytest.mark.parametrize("seed", range(8))
def test_incremental_random_matches_oracle(seed):
    rng = random.Random(seed)
    n = 20
    inc = IncrementalFlow(n, 0, n - 1)
    arcs = set()
    for _ in range(70):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (u, v) in arcs:
            continue
        arcs.add((u, v))
        inc.insert_edge(u, v)
        assert inc.F == static_max_flow(range(n), arcs, 0, n - 1)
        assert inc.verify()


@pytest.mark.parametrize("seed", range(8))
def test_fully_dynamic_random_matches_oracle(seed):
    rng = random.Random(100 + seed)
    n = 12
    net = FlowNetwork(n, 0, n - 1)
    arcs = set()
    for _ in range(150):
        if rng.random() < 0.6 or not arcs:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or (u, v) in arcs:
                continue
            arcs.add((u, v))
            net.insert_edge(u, v)
        else:
            u, v = rng.choice(sorted(arcs))
            arcs.discard((u, v))
            net.delete_edge(u, v)
        assert net.F == static_max_flow(range(n), arcs, 0, n - 1)
        assert net.verify()


def test_fully_dynamic_per_update_work_linear():
    rng = random.Random(7)
    n = 15
    net = FlowNetwork(n, 0, n - 1)
    arcs = set()
    for _ in range(120):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (u, v) in arcs:
            continue
        arcs.add((u, v))
        net.insert_edge(u, v)
        assert net.meter.op_edges_touched <= 4 * max(net.m, 1)


def test_incremental_stage_work_linear():
    rng = random.Random(8)
    n = 18
    inc = IncrementalFlow(n, 0, n - 1)
    arcs = set()
    for _ in range(90):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (u, v) in arcs:
            continue
        arcs.add((u, v))
        inc.insert_edge(u, v)
        assert inc.current_stage_touches() <= 8 * max(inc.net.m, 1)
    for stage in inc.stage_touches:
        assert stage <= 8 * max(inc.net.m, 1)
