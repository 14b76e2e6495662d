"""Unit-capacity s-t maximum flow under edge updates.

The fully dynamic path repairs the flow with at most one residual search per
update.  The incremental path keeps a reachability tree from the source over
the residual graph; the tree absorbs insertions until the sink becomes
reachable, at which point the flow is augmented and the tree rebuilt, so the
total tree work within one stage is linear in the edge count.

Residual arcs are derived from the flow flags: an edge carries its arc
forward while empty and backward while saturated.  Anti-parallel real edges
are distinct; only exact duplicates are rejected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    MissingEdgeError,
    NotIncrementalError,
    ParallelEdgeError,
    SelfLoopError,
    UnknownVertexError,
)
from .meter import CostMeter


@dataclass
class FlowDelta:
    dF: int
    path: list[int] | None = None


class FlowNetwork:
    def __init__(self, n: int, s: int, t: int):
        if s == t:
            raise SelfLoopError("source equals sink")
        self.out_edges: dict[int, set[int]] = {v: set() for v in range(n)}
        self.in_edges: dict[int, set[int]] = {v: set() for v in range(n)}
        self.flow: dict[tuple[int, int], int] = {}
        self.s = s
        self.t = t
        self.F = 0
        self.meter = CostMeter()
        self._require(s)
        self._require(t)

    # -- structure -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.flow)

    def add_vertex(self) -> int:
        v = len(self.out_edges)
        self.out_edges[v] = set()
        self.in_edges[v] = set()
        return v

    def vertices(self) -> list[int]:
        return list(self.out_edges)

    def directed_edges(self) -> list[tuple[int, int]]:
        return list(self.flow)

    def residual_out(self, u: int) -> list[int]:
        targets = {v for v in self.out_edges[u] if self.flow[(u, v)] == 0}
        targets |= {v for v in self.in_edges[u] if self.flow[(v, u)] == 1}
        return sorted(targets)

    # -- fully dynamic updates -------------------------------------------

    def insert_edge(self, u: int, v: int) -> FlowDelta:
        self._add_edge(u, v)
        self.meter.begin_op()
        self.meter.updates += 1
        path = self._find_path(self.s, self.t)
        if path is None:
            self.meter.end_op()
            return FlowDelta(0)
        self._push(path)
        self.F += 1
        self.meter.end_op()
        return FlowDelta(1, path)

    def delete_edge(self, u: int, v: int) -> FlowDelta:
        if (u, v) not in self.flow:
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        carried = self.flow.pop((u, v))
        self.out_edges[u].discard(v)
        self.in_edges[v].discard(u)
        self.meter.begin_op()
        self.meter.updates += 1
        if not carried:
            self.meter.end_op()
            return FlowDelta(0)
        path = self._find_path(u, v)
        if path is not None:
            self._push(path)
            self.meter.end_op()
            return FlowDelta(0, path)
        path = self._find_path(u, v, aux_st=True)
        assert path is not None, "send-back path must exist"
        self._push(path, skip_aux=True)
        self.F -= 1
        self.meter.end_op()
        return FlowDelta(-1, path)

    # -- auditing --------------------------------------------------------

    def verify(self) -> bool:
        """Capacity, conservation, flow value and maximality by rescan."""
        balance: dict[int, int] = {v: 0 for v in self.out_edges}
        for (u, v), f in self.flow.items():
            if f not in (0, 1):
                return False
            balance[u] -= f
            balance[v] += f
        for v, b in balance.items():
            if v == self.s or v == self.t:
                continue
            if b != 0:
                return False
        if -balance[self.s] != self.F or balance[self.t] != self.F or self.F < 0:
            return False
        return self._reach(self.s).get(self.t) is None

    # -- internals -------------------------------------------------------

    def _add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        self._require(u)
        self._require(v)
        if (u, v) in self.flow:
            raise ParallelEdgeError(f"edge ({u},{v}) already present")
        self.flow[(u, v)] = 0
        self.out_edges[u].add(v)
        self.in_edges[v].add(u)

    def _require(self, v: int) -> None:
        if v not in self.out_edges:
            raise UnknownVertexError(f"vertex {v} is not live")

    def _reach(self, src: int, aux_st: bool = False) -> dict[int, int]:
        prev = {src: src}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            targets = self.residual_out(u)
            if aux_st and u == self.s and self.t not in targets:
                targets = sorted(targets + [self.t])
            self.meter.touch(len(targets))
            for v in targets:
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        return prev

    def _find_path(self, src: int, dst: int, aux_st: bool = False) -> list[int] | None:
        prev = self._reach(src, aux_st=aux_st)
        if dst not in prev or src == dst:
            return None
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        path.reverse()
        return path

    def _push(self, path: list[int], skip_aux: bool = False) -> None:
        for a, b in zip(path, path[1:]):
            if self.flow.get((a, b)) == 0:
                self.flow[(a, b)] = 1
            elif self.flow.get((b, a)) == 1:
                self.flow[(b, a)] = 0
            else:
                assert skip_aux and a == self.s and b == self.t, "broken residual path"


class IncrementalFlow:
    """Insertion-only flow with a source reachability tree per stage."""

    def __init__(self, n: int, s: int, t: int):
        self.net = FlowNetwork(n, s, t)
        self.meter = self.net.meter
        self.parent: dict[int, int] = {}
        self.in_tree: set[int] = {s}
        self.stage_touches: list[int] = []
        self._stage_touched = 0

    @property
    def F(self) -> int:
        return self.net.F

    def add_vertex(self) -> int:
        return self.net.add_vertex()

    def delete_edge(self, u: int, v: int) -> FlowDelta:
        raise NotIncrementalError("incremental flow rejects deletions")

    def insert_edge(self, u: int, v: int) -> FlowDelta:
        self.net._add_edge(u, v)
        self.meter.begin_op()
        self.meter.updates += 1
        self._touch(1)
        delta = FlowDelta(0)
        if u in self.in_tree and v not in self.in_tree:
            self.parent[v] = u
            self.in_tree.add(v)
            self._explore([v])
            while self.net.t in self.in_tree:
                path = self._trace_sink()
                self.net._push(path)
                self.net.F += 1
                delta = FlowDelta(delta.dF + 1, path)
                self.stage_touches.append(self._stage_touched)
                self._stage_touched = 0
                self._rebuild_tree()
        self.meter.end_op()
        return delta

    def current_stage_touches(self) -> int:
        return self._stage_touched

    def verify(self) -> bool:
        return self.net.verify()

    # -- internals -------------------------------------------------------

    def _touch(self, count: int) -> None:
        self.meter.touch(count)
        self._stage_touched += count

    def _explore(self, frontier: list[int]) -> None:
        while frontier:
            w = frontier.pop()
            if self.net.t in self.in_tree:
                return
            targets = self.net.residual_out(w)
            self._touch(len(targets))
            for x in targets:
                if x not in self.in_tree:
                    self.parent[x] = w
                    self.in_tree.add(x)
                    frontier.append(x)

    def _trace_sink(self) -> list[int]:
        path = [self.net.t]
        while path[-1] != self.net.s:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path

    def _rebuild_tree(self) -> None:
        self.parent = {}
        self.in_tree = {self.net.s}
        stack = [self.net.s]
        while stack:
            w = stack.pop()
            targets = self.net.residual_out(w)
            self._touch(len(targets))
            for x in targets:
                if x not in self.in_tree:
                    self.parent[x] = w
                    self.in_tree.add(x)
                    stack.append(x)
