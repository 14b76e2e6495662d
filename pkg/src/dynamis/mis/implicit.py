"""Implicit MIS: an independent set plus partial counts, grown by queries.

Updates never add vertices to the maintained set S; an edge landing inside S
evicts one endpoint, so S stays independent at worst-case cost bounded by the
number of tracked (high-degree) neighbors.  Membership queries lazily admit
the queried vertex when legal, so sweeping all vertices materializes an MIS.

Tracked vertices keep an exact count of neighbors in S.  Tracking follows two
thresholds derived from the epoch baseline m_c: degree above ceil(sqrt(m_c))
forces immediate tracking, degree above ceil(sqrt(m_c/2)) queues the vertex
as a candidate, and one candidate is promoted per update so that every future
heavy vertex is already tracked when the baseline halves.  Below a small m_c
floor every vertex is tracked; the thresholds would be degenerate there.
"""

from __future__ import annotations

from math import isqrt

from ..errors import VertexUpdateUnsupportedError
from ..graph import DynGraph
from ..meter import AdjustmentLog, CostMeter
from ..stream import DeleteEdge, DeleteVertex, InsertEdge, InsertVertex, UpdateEvent

EAGER_FLOOR = 64


def _ceil_sqrt(x: int) -> int:
    return 0 if x <= 0 else isqrt(x - 1) + 1


class ImplicitMis:
    def __init__(self, g: DynGraph):
        self.g = g
        self.meter = CostMeter()
        self.in_S: set[int] = set()
        self.tracked: set[int] = set()
        self.hcount: dict[int, int] = {}
        self.heavy_adj: dict[int, set[int]] = {v: set() for v in g.vertices()}
        self.candidates: set[int] = set()
        self.m_c = max(g.m, 1)
        self._set_thresholds()
        if self.eager:
            for v in g.vertices():
                self._promote(v)
        else:
            for v in g.vertices():
                if len(g.adj[v]) > self.tau:
                    self._promote(v)
                elif len(g.adj[v]) > self.cand_thresh:
                    self.candidates.add(v)

    def _set_thresholds(self) -> None:
        self.tau = _ceil_sqrt(self.m_c)
        self.cand_thresh = _ceil_sqrt((self.m_c + 1) // 2)
        self.eager = self.m_c < EAGER_FLOOR

    # -- public surface --------------------------------------------------

    def independent_set(self) -> set[int]:
        return set(self.in_S)

    def apply(self, event: UpdateEvent) -> AdjustmentLog:
        self.meter.begin_op()
        self.meter.updates += 1
        log = AdjustmentLog()
        if isinstance(event, InsertEdge):
            self._insert_edge(event.u, event.v, log)
        elif isinstance(event, DeleteEdge):
            self._delete_edge(event.u, event.v, log)
        elif isinstance(event, InsertVertex):
            if event.neighbors:
                raise VertexUpdateUnsupportedError("vertex insertion with incident edges")
            self._insert_isolated()
        elif isinstance(event, DeleteVertex):
            self._delete_vertex(event.v, log)
        else:
            raise ValueError("queries go through in_mis_query")
        self._process_one_candidate()
        self._epoch_transitions()
        log.edges_touched = self.meter.op_edges_touched
        self.meter.end_op()
        return log

    def in_mis_query(self, v: int) -> bool:
        self.g._require(v)
        self.meter.begin_op()
        self.meter.queries += 1
        result = self._query(v)
        self.meter.end_op()
        return result

    def audit(self) -> bool:
        """Full-rescan check of independence, tracking and count invariants."""
        g = self.g
        if g.m > 0 and not (self.m_c / 2 < g.m < 2 * self.m_c):
            return False
        for v in self.in_S:
            if g.adj[v] & self.in_S:
                return False
        for v in g.vertices():
            deg = len(g.adj[v])
            if deg > self.tau and v not in self.tracked:
                return False
            if v in self.tracked and self.hcount[v] != len(g.adj[v] & self.in_S):
                return False
            if self.heavy_adj[v] != (g.adj[v] & self.tracked):
                return False
            if v not in self.tracked and deg > self.cand_thresh and v not in self.candidates:
                return False
        if not self.candidates.isdisjoint(self.tracked):
            return False
        if not self.eager and self.cand_thresh > 0:
            if len(self.tracked) * self.cand_thresh > 4 * max(g.m, 1):
                return False
        return True

    # -- event handlers --------------------------------------------------

    def _insert_edge(self, u: int, v: int, log: AdjustmentLog) -> None:
        self.g.insert_edge(u, v)
        if u in self.tracked:
            self.heavy_adj[v].add(u)
        if v in self.tracked:
            self.heavy_adj[u].add(v)
        for x in (u, v):
            deg = len(self.g.adj[x])
            if x not in self.tracked:
                if deg > self.tau or self.eager:
                    self._promote(x)
                elif deg > self.cand_thresh:
                    self.candidates.add(x)
        if u in self.in_S and v in self.tracked:
            self.hcount[v] += 1
            self.meter.touch()
        if v in self.in_S and u in self.tracked:
            self.hcount[u] += 1
            self.meter.touch()
        if u in self.in_S and v in self.in_S:
            self._leave_S(max(u, v), log)

    def _delete_edge(self, u: int, v: int, log: AdjustmentLog) -> None:
        if u in self.in_S and v in self.tracked:
            self.hcount[v] -= 1
            self.meter.touch()
        if v in self.in_S and u in self.tracked:
            self.hcount[u] -= 1
            self.meter.touch()
        self.g.delete_edge(u, v)
        self.heavy_adj[u].discard(v)
        self.heavy_adj[v].discard(u)
        for x in (u, v):
            self._recheck_after_degree_drop(x)

    def _insert_isolated(self) -> int:
        v = self.g.insert_vertex(())
        self.heavy_adj[v] = set()
        if self.eager:
            self._promote(v)
        return v

    def _delete_vertex(self, v: int, log: AdjustmentLog) -> None:
        if v in self.in_S:
            self._leave_S(v, log)
        for w in sorted(self.g.adj[v]):
            self._delete_edge(v, w, log)
        if v in self.tracked:
            self.tracked.discard(v)
            del self.hcount[v]
        self.candidates.discard(v)
        del self.heavy_adj[v]
        self.g.delete_vertex(v)

    def _query(self, v: int) -> bool:
        if v in self.in_S:
            return True
        if v in self.tracked:
            if self.hcount[v] != 0:
                return False
            self._enter_S(v)
            return True
        blocked = False
        for w in sorted(self.g.adj[v]):
            if w in self.in_S:
                blocked = True
                break
        self.meter.touch(len(self.g.adj[v]))
        if blocked:
            return False
        self._enter_S(v)
        return True

    # -- internals -------------------------------------------------------

    def _enter_S(self, v: int) -> None:
        self.in_S.add(v)
        self.meter.adjust()
        for x in self.heavy_adj[v]:
            self.hcount[x] += 1
        self.meter.touch(len(self.heavy_adj[v]))

    def _leave_S(self, v: int, log: AdjustmentLog) -> None:
        self.in_S.discard(v)
        self.meter.adjust()
        log.leave(v)
        for x in self.heavy_adj[v]:
            self.hcount[x] -= 1
        self.meter.touch(len(self.heavy_adj[v]))

    def _promote(self, v: int) -> None:
        self.tracked.add(v)
        self.candidates.discard(v)
        self.hcount[v] = len(self.g.adj[v] & self.in_S)
        for w in self.g.adj[v]:
            self.heavy_adj[w].add(v)
        self.meter.touch(2 * len(self.g.adj[v]))

    def _demote(self, v: int) -> None:
        self.tracked.discard(v)
        del self.hcount[v]
        for w in self.g.adj[v]:
            self.heavy_adj[w].discard(v)
        self.meter.touch(len(self.g.adj[v]))
        if len(self.g.adj[v]) > self.cand_thresh:
            self.candidates.add(v)

    def _recheck_after_degree_drop(self, v: int) -> None:
        if self.eager:
            return
        deg = len(self.g.adj[v])
        if v in self.tracked and deg <= self.cand_thresh:
            self._demote(v)
        elif v not in self.tracked and deg <= self.cand_thresh:
            self.candidates.discard(v)

    def _process_one_candidate(self) -> None:
        if self.candidates and not self.eager:
            c = min(self.candidates)
            self.candidates.discard(c)
            if len(self.g.adj[c]) > self.cand_thresh:
                self._promote(c)

    def _epoch_transitions(self) -> None:
        m = self.g.m
        while m >= 2 * self.m_c:
            self.m_c *= 2
            self._apply_new_thresholds(grew=True)
            m = self.g.m
        while m <= self.m_c // 2 and self.m_c > 1:
            self.m_c //= 2
            self._apply_new_thresholds(grew=False)
            m = self.g.m

    def _apply_new_thresholds(self, grew: bool) -> None:
        was_eager = self.eager
        self._set_thresholds()
        if self.eager:
            if not was_eager:
                for v in self.g.vertices():
                    if v not in self.tracked:
                        self._promote(v)
                self.candidates.clear()
            elif grew:
                for v in self.g.vertices():
                    if v not in self.tracked:
                        self._promote(v)
            return
        if grew:
            for v in [v for v in self.tracked if len(self.g.adj[v]) <= self.cand_thresh]:
                self._demote(v)
            self.candidates = {v for v in self.candidates if len(self.g.adj[v]) > self.cand_thresh}
        else:
            for v in [v for v in self.candidates if len(self.g.adj[v]) > self.tau]:
                self._promote(v)
            # degree comparisons only; rebuilding the candidate pool reads no
            # adjacency entries, so it is not metered
            self.candidates = {
                v
                for v in self.g.vertices()
                if v not in self.tracked and len(self.g.adj[v]) > self.cand_thresh
            }
