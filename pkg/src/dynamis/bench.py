"""Replay harness: run an update stream through an algorithm and report.

A replay session wraps one algorithm instance behind a uniform surface
(apply / query / check / summary) so the CLI and the scaling fitter do not
care which module they drive.  Compatibility is checked up front: incremental
algorithms reject streams with deletions, flow algorithms require a flow
header, and so on; a mismatch raises before any event is applied.
"""

from __future__ import annotations

import time
from math import isqrt, log

from .errors import IncompatibleStreamError, VerificationFailedError
from .flow import FlowNetwork, IncrementalFlow
from .generators import (
    gen_arbitrary_removal,
    gen_degree_biased,
    gen_random_edges,
    gen_random_flow,
)
from .graph import DynGraph
from .matching import DynamicMatching, IncrementalMatching
from .mis import ImplicitMis, IncrementalMis, SimpleMis, TwoLevelMis
from .oracles import is_mis, static_max_flow
from .stream import (
    DeleteEdge,
    DeleteVertex,
    InsertEdge,
    InsertVertex,
    QueryInMis,
    UpdateStream,
)

ALGORITHMS = (
    "mis-simple",
    "mis-inc",
    "mis-2level",
    "mis-implicit",
    "flow-fd",
    "flow-inc",
    "match-fd",
    "match-inc",
)

_MIS_ALGS = ("mis-simple", "mis-inc", "mis-2level", "mis-implicit")
_INCREMENTAL_ALGS = ("mis-inc", "flow-inc", "match-inc")


def check_compatible(algorithm: str, stream: UpdateStream) -> None:
    if algorithm not in ALGORITHMS:
        raise IncompatibleStreamError(f"unknown algorithm {algorithm!r}")
    is_flow_alg = algorithm in ("flow-fd", "flow-inc")
    if is_flow_alg and stream.flow is None:
        raise IncompatibleStreamError(f"{algorithm} needs a `flow s t` header")
    if not is_flow_alg and stream.flow is not None:
        raise IncompatibleStreamError(f"{algorithm} cannot replay a flow stream")
    if algorithm in _INCREMENTAL_ALGS and not stream.is_incremental():
        raise IncompatibleStreamError(f"{algorithm} rejects deletions")
    if algorithm not in _MIS_ALGS and stream.has_queries():
        raise IncompatibleStreamError(f"{algorithm} does not answer In-MIS queries")
    if algorithm in ("mis-inc", "mis-implicit", "match-inc"):
        if any(isinstance(e, InsertVertex) and e.neighbors for e in stream.events):
            raise IncompatibleStreamError(
                f"{algorithm} accepts only isolated vertex insertions"
            )
    if is_flow_alg:
        for e in stream.events:
            if isinstance(e, DeleteVertex) or (isinstance(e, InsertVertex) and e.neighbors):
                raise IncompatibleStreamError(f"{algorithm} supports edge updates only")


class ReplaySession:
    """One algorithm instance driven event by event."""

    def __init__(self, algorithm: str, stream: UpdateStream):
        check_compatible(algorithm, stream)
        self.algorithm = algorithm
        self.stream = stream
        self.query_results: list[tuple[int, int]] = []
        if algorithm in _MIS_ALGS:
            self.g = DynGraph(stream.n)
            maker = {
                "mis-simple": SimpleMis,
                "mis-inc": IncrementalMis,
                "mis-2level": TwoLevelMis,
                "mis-implicit": ImplicitMis,
            }[algorithm]
            self.alg = maker(self.g)
        elif algorithm in ("flow-fd", "flow-inc"):
            s, t = stream.flow
            maker = FlowNetwork if algorithm == "flow-fd" else IncrementalFlow
            self.alg = maker(max(stream.n, max(s, t) + 1), s, t)
        elif algorithm == "match-fd":
            self.g = DynGraph(stream.n)
            self.alg = DynamicMatching(self.g)
        else:
            self.alg = IncrementalMatching()
            for _ in range(stream.n):
                self.alg.insert_vertex()
            self.g = self.alg.g
        self.meter = self.alg.meter

    def step(self, event) -> None:
        if isinstance(event, QueryInMis):
            if self.algorithm == "mis-implicit":
                answer = self.alg.in_mis_query(event.v)
            else:
                answer = self.alg.contains(event.v)
            self.query_results.append((event.v, int(answer)))
            return
        if self.algorithm in ("flow-fd", "flow-inc"):
            if isinstance(event, InsertEdge):
                self.alg.insert_edge(event.u, event.v)
            elif isinstance(event, DeleteEdge):
                self.alg.delete_edge(event.u, event.v)
            else:
                self.alg.add_vertex()
            return
        self.alg.apply(event)

    def check(self, event_index: int) -> None:
        """Module verifier plus independent oracle; raises on any failure."""
        alg, name = self.alg, self.algorithm
        if name in ("mis-simple", "mis-inc", "mis-2level"):
            if not alg.verify():
                raise VerificationFailedError(event_index, "internal audit failed")
            report = is_mis(self.g.adj, alg.mis())
            if not report.ok:
                raise VerificationFailedError(event_index, report.detail)
        elif name == "mis-implicit":
            if not alg.audit():
                raise VerificationFailedError(event_index, "internal audit failed")
        elif name in ("flow-fd", "flow-inc"):
            net = alg if name == "flow-fd" else alg.net
            if not alg.verify():
                raise VerificationFailedError(event_index, "flow audit failed")
            want = static_max_flow(net.vertices(), net.directed_edges(), net.s, net.t)
            if net.F != want:
                raise VerificationFailedError(event_index, f"F={net.F}, oracle={want}")
        else:
            if not alg.verify():
                raise VerificationFailedError(event_index, "matching audit failed")

    def result(self) -> dict:
        name = self.algorithm
        if name in ("mis-simple", "mis-inc", "mis-2level"):
            return {"mis_size": len(self.alg.mis())}
        if name == "mis-implicit":
            return {"independent_set_size": len(self.alg.independent_set())}
        if name in ("flow-fd", "flow-inc"):
            return {"flow_value": self.alg.F}
        return {"matching_size": self.alg.cardinality}

    def final_shape(self) -> tuple[int, int]:
        if self.algorithm in ("flow-fd", "flow-inc"):
            net = self.alg if self.algorithm == "flow-fd" else self.alg.net
            return len(net.out_edges), net.m
        return self.g.n, self.g.m


def replay(algorithm: str, stream: UpdateStream, verify: bool = False) -> dict:
    """Run the whole stream and build a RunReport dictionary."""
    session = ReplaySession(algorithm, stream)
    start = time.perf_counter()
    verified: bool | None = None
    if verify:
        session.check(-1)
        verified = True
    for i, event in enumerate(stream.events):
        session.step(event)
        if verify:
            session.check(i)
    wall = time.perf_counter() - start
    n, m = session.final_shape()
    meter = session.meter
    report = {
        "algorithm": algorithm,
        "stream": {"events": len(stream.events), "final_n": n, "final_m": m},
        "totals": dict(meter.totals(), wall_time_s=round(wall, 6)),
        "per_update_max": {
            "edges_touched": meter.max_op_edges_touched,
            "adjustments": meter.max_op_adjustments,
        },
        "verified": verified,
        "result": session.result(),
    }
    if session.query_results:
        report["query_results"] = [list(q) for q in session.query_results]
    return report


def _ceil_sqrt(x: int) -> int:
    return 0 if x <= 0 else isqrt(x - 1) + 1


def stream_for_size(family: str, m: int, seed: int = 0) -> UpdateStream:
    if family == "arbitrary-removal":
        return gen_arbitrary_removal(m, _ceil_sqrt(m))
    if family == "degree-biased":
        return gen_degree_biased(m)
    if family in ("random-edges", "random-matching"):
        n = max(16, 2 * isqrt(m))
        return gen_random_edges(n, m, seed, p_insert=1.0)
    if family == "random-flow":
        n = max(16, 2 * isqrt(m))
        return gen_random_flow(n, m, seed, p_insert=1.0)
    raise IncompatibleStreamError(f"unknown family {family!r}")


def fit_slope(sizes: list[int], totals: list[int]) -> float:
    """Least-squares slope of log(total) against log(size)."""
    from statistics import linear_regression

    xs = [log(s) for s in sizes]
    ys = [log(max(t, 1)) for t in totals]
    return linear_regression(xs, ys).slope


def scaling(algorithm: str, family: str, sizes: list[int], seed: int = 0) -> dict:
    per_size = []
    for m in sizes:
        stream = stream_for_size(family, m, seed)
        run = replay(algorithm, stream)
        per_size.append({"m": m, "totals": run["totals"]})
    totals = [entry["totals"]["edges_touched"] for entry in per_size]
    return {
        "algorithm": algorithm,
        "family": family,
        "sizes": list(sizes),
        "per_size": per_size,
        "slope": round(fit_slope(sizes, totals), 4),
    }
