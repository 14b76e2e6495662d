import random

import pytest

from dynamis import DeleteEdge, DeleteVertex, DynGraph, ImplicitMis, InsertEdge, InsertVertex
from dynamis.errors import VertexUpdateUnsupportedError
from dynamis.mis.implicit import EAGER_FLOOR, _ceil_sqrt
from dynamis.oracles import is_mis


def build(n, edges):
    g = DynGraph(n)
    for u, v in edges:
        g.insert_edge(u, v)
    return g


def sweep(alg):
    """Query every live vertex; returns the true-answer set."""
    return {v for v in sorted(alg.g.adj) if alg.in_mis_query(v)}


def test_ceil_sqrt():
    assert [_ceil_sqrt(x) for x in (0, 1, 2, 4, 5, 9, 10)] == [0, 1, 2, 2, 3, 3, 4]


def test_insert_inside_set_removes_one():
    alg = ImplicitMis(DynGraph(4))
    assert sweep(alg) == {0, 1, 2, 3}
    log = alg.apply(InsertEdge(1, 3))
    assert log.removed == [3]  # higher id leaves
    assert alg.in_S == {0, 1, 2}
    assert alg.audit()


def test_insert_with_endpoint_outside_set():
    alg = ImplicitMis(DynGraph(4))
    sweep(alg)
    alg.apply(InsertEdge(1, 3))  # 3 leaves
    log = alg.apply(InsertEdge(3, 2))  # 2 in S, 3 out: no S change
    assert log.changes == []
    assert alg.in_S == {0, 1, 2}
    # with m_c under the floor everything is tracked, so 3's count is exact
    assert alg.hcount[3] == 2
    assert alg.audit()


def test_epoch_doubling_fires_once():
    g = build(300, [(2 * i, 2 * i + 1) for i in range(70)])
    alg = ImplicitMis(g)
    m_c = alg.m_c
    assert m_c == 70
    for i in range(70, 70 + (2 * m_c - g.m)):
        alg.apply(InsertEdge(2 * i, 2 * i + 1))
    assert alg.m_c == 2 * m_c
    assert alg.audit()


def test_query_isolated_joins():
    alg = ImplicitMis(DynGraph(3))
    assert alg.in_mis_query(1)
    assert 1 in alg.in_S


def test_query_blocked_by_neighbor():
    alg = ImplicitMis(build(2, [(0, 1)]))
    assert alg.in_mis_query(0)
    assert not alg.in_mis_query(1)


def test_query_tracked_updates_neighbor_counts():
    g = build(40, [(0, w) for w in range(1, 31)])
    alg = ImplicitMis(g)
    assert 0 in alg.tracked  # degree 30 > tau
    assert alg.hcount[0] == 0
    assert alg.in_mis_query(0)
    for w in g.adj[0] & alg.tracked:
        assert alg.hcount[w] >= 1
    assert alg.audit()


def test_queries_stable_within_batch():
    g = build(12, [(0, 1), (1, 2), (3, 4), (4, 5), (2, 3)])
    alg = ImplicitMis(g)
    answers = {v: alg.in_mis_query(v) for v in sorted(g.adj)}
    again = {v: alg.in_mis_query(v) for v in sorted(g.adj)}
    assert answers == again


def test_sweep_yields_mis():
    g = build(10, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (0, 9)])
    alg = ImplicitMis(g)
    s = sweep(alg)
    assert is_mis(g.adj, s).ok


def test_vertex_event_with_edges_rejected():
    alg = ImplicitMis(DynGraph(3))
    with pytest.raises(VertexUpdateUnsupportedError):
        alg.apply(InsertVertex((0,)))


def test_isolated_vertex_events_supported():
    alg = ImplicitMis(DynGraph(2))
    sweep(alg)
    alg.apply(InsertVertex(()))
    assert alg.in_mis_query(2)
    log = alg.apply(DeleteVertex(2))
    assert log.removed == [2]
    assert alg.audit()


def test_audit_catches_stale_count():
    g = build(40, [(0, w) for w in range(1, 31)])
    alg = ImplicitMis(g)
    assert alg.audit()
    alg.hcount[0] += 1
    assert not alg.audit()


def test_audit_catches_dependent_pair():
    alg = ImplicitMis(build(2, [(0, 1)]))
    alg.in_S = {0, 1}
    assert not alg.audit()


def _edge_events(rng, g, queries=0.25):
    live = sorted(g.adj)
    r = rng.random()
    if r < queries:
        return "query", rng.choice(live)
    for _ in range(30):
        if rng.random() < 0.65 and len(live) >= 2:
            u, v = rng.sample(live, 2)
            if not g.has_edge(u, v):
                return "event", InsertEdge(u, v)
        else:
            edges = sorted(g.edges())
            if edges:
                return "event", DeleteEdge(*rng.choice(edges))
    return None, None


@pytest.mark.parametrize("seed", range(10))
def test_random_streams_audit_and_sweep(seed):
    rng = random.Random(seed)
    g = DynGraph(14)
    alg = ImplicitMis(g)
    for _ in range(200):
        kind, payload = _edge_events(rng, g)
        if kind == "query":
            alg.in_mis_query(payload)
        elif kind == "event":
            log = alg.apply(payload)
            assert len(log.removed) <= 1
        assert alg.audit()
    s = sweep(alg)
    assert is_mis(g.adj, s).ok


@pytest.mark.parametrize("seed", range(4))
def test_epoch_transitions_under_growth_and_shrink(seed):
    rng = random.Random(40 + seed)
    n = 30
    g = DynGraph(n)
    alg = ImplicitMis(g)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    chosen = pairs[: EAGER_FLOOR + 80]
    for u, v in chosen:
        alg.apply(InsertEdge(u, v))
        assert alg.audit()
    assert not alg.eager
    rng.shuffle(chosen)
    for u, v in chosen:
        alg.apply(DeleteEdge(u, v))
        assert alg.audit()
    assert alg.m_c == 1
