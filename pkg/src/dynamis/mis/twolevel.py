"""Fully dynamic MIS with a heavy/light degree split.

Light vertices (degree below the phase threshold) run the count-based
maintainer among themselves; after every update the MIS of the heavy-induced
subgraph is rebuilt from scratch over the heavy vertices with no light
neighbor in the light MIS.  The threshold is re-baselined whenever the edge
count drifts by a factor of two since the phase started.

Classification follows the current degree: a vertex crossing the threshold
migrates immediately, paying one neighbor scan at the crossing.
"""

from __future__ import annotations

from typing import Iterable

from ..graph import DynGraph
from ..meter import AdjustmentLog, CostMeter
from ..stream import DeleteEdge, DeleteVertex, InsertEdge, InsertVertex, QueryInMis, UpdateEvent


def _ceil_pow_two_thirds(m: int) -> int:
    """Smallest d with d**3 >= m**2."""
    d = max(1, round(m ** (2.0 / 3.0)))
    while d ** 3 < m * m:
        d += 1
    while d > 1 and (d - 1) ** 3 >= m * m:
        d -= 1
    return d


class TwoLevelMis:
    def __init__(self, g: DynGraph):
        self.g = g
        self.meter = CostMeter()
        self.phase_rebuilds = 0
        self.last_heavy_rebuild_touches = 0
        self._init_phase()

    # -- public surface --------------------------------------------------

    def mis(self) -> set[int]:
        return self.light_M | self.heavy_mis

    def contains(self, v: int) -> bool:
        return v in self.light_M or v in self.heavy_mis

    def apply(self, event: UpdateEvent) -> AdjustmentLog:
        if isinstance(event, QueryInMis):
            raise ValueError("queries are not updates; read membership directly")
        self.meter.begin_op()
        self.meter.updates += 1
        log = AdjustmentLog()
        if isinstance(event, InsertEdge):
            self._insert_edge(event.u, event.v, log)
        elif isinstance(event, DeleteEdge):
            self._delete_edge(event.u, event.v, log)
        elif isinstance(event, InsertVertex):
            self._insert_vertex(event.neighbors, log)
        else:
            self._delete_vertex(event.v, log)
        self._rebuild_heavy_mis(log)
        if self.g.m <= self.m_c // 2 or self.g.m >= 2 * self.m_c:
            self._phase_rebuild(log)
        log.edges_touched = self.meter.op_edges_touched
        self.meter.end_op()
        return log

    def verify(self) -> bool:
        """Full-rescan audit of classification, counts and both MIS levels."""
        g = self.g
        if g.m > 0 and not (self.m_c / 2 < g.m < 2 * self.m_c):
            return False
        for v in g.vertices():
            if (v in self.heavy) != (len(g.adj[v]) >= self.delta_c):
                return False
            if self.heavy_nbrs[v] != (g.adj[v] & self.heavy):
                return False
            if self.light_count[v] != len(g.adj[v] & self.light_M):
                return False
        for v in self.light_M:
            if v in self.heavy or self.light_count[v] != 0:
                return False
        for v in g.vertices():
            if v not in self.heavy and v not in self.light_M and self.light_count[v] == 0:
                return False
        eligible = {v for v in self.heavy if self.light_count[v] == 0}
        if not self.heavy_mis <= eligible:
            return False
        for v in eligible:
            inside = self.heavy_nbrs[v] & self.heavy_mis
            if v in self.heavy_mis and inside:
                return False
            if v not in self.heavy_mis and not inside:
                return False
        return True

    # -- phase management ------------------------------------------------

    def _init_phase(self) -> None:
        g = self.g
        self.m_c = max(g.m, 1)
        self.delta_c = _ceil_pow_two_thirds(self.m_c)
        self.heavy = {v for v in g.vertices() if len(g.adj[v]) >= self.delta_c}
        self.heavy_nbrs = {v: g.adj[v] & self.heavy for v in g.vertices()}
        self.light_M: set[int] = set()
        self.light_count = {v: 0 for v in g.vertices()}
        for v in sorted(g.vertices()):
            if v not in self.heavy and self.light_count[v] == 0:
                self.light_M.add(v)
                for w in g.adj[v]:
                    self.light_count[w] += 1
                self.meter.touch(len(g.adj[v]))
        self.heavy_mis: set[int] = set()
        self.meter.touch(sum(len(g.adj[v]) for v in g.vertices()))
        self._rebuild_heavy_mis(AdjustmentLog(), account=False)

    def _phase_rebuild(self, log: AdjustmentLog) -> None:
        before = self.mis()
        self._init_phase()
        self.phase_rebuilds += 1
        after = self.mis()
        for v in sorted(before - after):
            log.leave(v)
        for v in sorted(after - before):
            log.enter(v)
        self.meter.adjust(len(before ^ after))

    # -- event handlers --------------------------------------------------

    def _insert_edge(self, u: int, v: int, log: AdjustmentLog) -> None:
        self.g.insert_edge(u, v)
        if u in self.heavy:
            self.heavy_nbrs[v].add(u)
        if v in self.heavy:
            self.heavy_nbrs[u].add(v)
        if u in self.light_M:
            self.light_count[v] += 1
        if v in self.light_M:
            self.light_count[u] += 1
        for x in (u, v):
            if x not in self.heavy and len(self.g.adj[x]) >= self.delta_c:
                self._migrate_to_heavy(x, log)
        if u in self.light_M and v in self.light_M:
            self._light_leave(u, log)
            self._admit_light_zeros(self.g.adj[u], log)

    def _delete_edge(self, u: int, v: int, log: AdjustmentLog) -> None:
        self.g.delete_edge(u, v)
        self.heavy_nbrs[u].discard(v)
        self.heavy_nbrs[v].discard(u)
        if u in self.light_M:
            self.light_count[v] -= 1
        if v in self.light_M:
            self.light_count[u] -= 1
        for x in (u, v):
            if x in self.heavy and len(self.g.adj[x]) < self.delta_c:
                self._migrate_to_light(x, log)
        self._admit_light_zeros((u, v), log)

    def _insert_vertex(self, neighbors: tuple[int, ...], log: AdjustmentLog) -> None:
        v = self.g.insert_vertex(neighbors)
        self.light_count[v] = sum(1 for w in neighbors if w in self.light_M)
        self.heavy_nbrs[v] = {w for w in neighbors if w in self.heavy}
        self.meter.touch(len(neighbors))
        if len(neighbors) >= self.delta_c:
            self.heavy.add(v)
            for w in neighbors:
                self.heavy_nbrs[w].add(v)
            self.meter.touch(len(neighbors))
        for w in neighbors:
            if w not in self.heavy and len(self.g.adj[w]) >= self.delta_c:
                self._migrate_to_heavy(w, log)
        self._admit_light_zeros((v,), log)

    def _delete_vertex(self, v: int, log: AdjustmentLog) -> None:
        nbrs = sorted(self.g.adj[v])
        if v in self.light_M:
            self._light_leave(v, log)
        if v in self.heavy:
            self.heavy.discard(v)
            for w in nbrs:
                self.heavy_nbrs[w].discard(v)
            self.meter.touch(len(nbrs))
        if v in self.heavy_mis:
            self.heavy_mis.discard(v)
            self.meter.adjust()
            log.leave(v)
        self.g.delete_vertex(v)
        del self.light_count[v]
        del self.heavy_nbrs[v]
        for w in nbrs:
            if w in self.heavy and len(self.g.adj[w]) < self.delta_c:
                self._migrate_to_light(w, log)
        self._admit_light_zeros(nbrs, log)

    # -- internals -------------------------------------------------------

    def _migrate_to_heavy(self, v: int, log: AdjustmentLog) -> None:
        self.heavy.add(v)
        for w in self.g.adj[v]:
            self.heavy_nbrs[w].add(v)
        self.meter.touch(len(self.g.adj[v]))
        if v in self.light_M:
            self._light_leave(v, log)
            self._admit_light_zeros(self.g.adj[v], log)

    def _migrate_to_light(self, v: int, log: AdjustmentLog) -> None:
        self.heavy.discard(v)
        self.heavy_mis.discard(v)
        for w in self.g.adj[v]:
            self.heavy_nbrs[w].discard(v)
        self.meter.touch(len(self.g.adj[v]))
        if self.light_count[v] == 0:
            self._light_enter(v, log)

    def _light_leave(self, v: int, log: AdjustmentLog) -> None:
        self.light_M.discard(v)
        self.meter.adjust()
        log.leave(v)
        for w in self.g.adj[v]:
            self.light_count[w] -= 1
        self.meter.touch(len(self.g.adj[v]))

    def _light_enter(self, v: int, log: AdjustmentLog) -> None:
        self.light_M.add(v)
        self.meter.adjust()
        log.enter(v)
        for w in self.g.adj[v]:
            self.light_count[w] += 1
        self.meter.touch(len(self.g.adj[v]))

    def _admit_light_zeros(self, candidates: Iterable[int], log: AdjustmentLog) -> None:
        for w in sorted(candidates):
            if (
                w in self.light_count
                and w not in self.heavy
                and w not in self.light_M
                and self.light_count[w] == 0
            ):
                self._light_enter(w, log)

    def _rebuild_heavy_mis(self, log: AdjustmentLog, account: bool = True) -> None:
        touched = 0
        chosen: set[int] = set()
        for v in sorted(self.heavy):
            if self.light_count[v] != 0:
                continue
            touched += len(self.heavy_nbrs[v])
            if self.heavy_nbrs[v].isdisjoint(chosen):
                chosen.add(v)
        self.meter.touch(touched)
        self.last_heavy_rebuild_touches = touched
        if chosen != self.heavy_mis:
            if account:
                for v in sorted(self.heavy_mis - chosen):
                    log.leave(v)
                for v in sorted(chosen - self.heavy_mis):
                    log.enter(v)
                self.meter.adjust(len(chosen ^ self.heavy_mis))
            self.heavy_mis = chosen
