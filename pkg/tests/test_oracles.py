import random

from dynamis.oracles import (
    exhaustive_max_matching,
    is_mis,
    min_cut_enumerate,
    static_max_flow,
    static_max_matching,
    static_mis,
)


def triangle():
    return {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}


def path3():
    return {0: {1}, 1: {0, 2}, 2: {1}}


def test_is_mis_triangle():
    assert is_mis(triangle(), {0}).ok
    assert not is_mis(triangle(), {0, 1}).ok


def test_is_mis_path():
    assert is_mis(path3(), {1}).ok
    assert not is_mis(path3(), {0}).ok


def test_static_mis_star_orders():
    star = {0: {1, 2, 3}, 1: {0}, 2: {0}, 3: {0}}
    assert static_mis(star, order=[0, 1, 2, 3]) == {0}
    assert static_mis(star, order=[1, 2, 3, 0]) == {1, 2, 3}


def test_static_mis_empty_graph():
    adj = {v: set() for v in range(5)}
    assert static_mis(adj) == set(range(5))


def test_flow_single_edge():
    assert static_max_flow([0, 1], [(0, 1)], 0, 1) == 1


def test_flow_disjoint_paths():
    k = 3
    vertices = [0, 1] + list(range(2, 2 + k))
    edges = [(0, 2 + i) for i in range(k)] + [(2 + i, 1) for i in range(k)]
    assert static_max_flow(vertices, edges, 0, 1) == k


def test_flow_matches_cut_on_diamond():
    vertices = [0, 1, 2, 3]
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    value = static_max_flow(vertices, edges, 0, 3)
    assert value == min_cut_enumerate(vertices, edges, 0, 3) == 2


def test_flow_matches_cut_random():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(3, 7)
        arcs = set()
        for _ in range(rng.randint(2, 14)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                arcs.add((u, v))
        arcs = sorted(arcs)
        assert static_max_flow(range(n), arcs, 0, n - 1) == min_cut_enumerate(
            range(n), arcs, 0, n - 1
        )


def test_matching_single_edge():
    assert static_max_matching({0: {1}, 1: {0}}) == 1


def test_matching_c5():
    c5 = {i: {(i - 1) % 5, (i + 1) % 5} for i in range(5)}
    assert static_max_matching(c5) == 2
    assert exhaustive_max_matching(c5) == 2


def test_matching_c6():
    c6 = {i: {(i - 1) % 6, (i + 1) % 6} for i in range(6)}
    assert static_max_matching(c6) == 3
    assert exhaustive_max_matching(c6) == 3


def test_matching_matches_exhaustive_sampled():
    rng = random.Random(42)
    for _ in range(10_000):
        n = rng.randint(2, 8)
        adj = {v: set() for v in range(n)}
        for _ in range(rng.randint(0, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        assert static_max_matching(adj) == exhaustive_max_matching(adj)
