"""Update events and the line-oriented stream text format.

One event per line, ASCII, ``#`` comments.  Optional header directives come
first: ``n <count>`` preallocates vertices, ``flow <s> <t>`` marks a directed
flow stream (``+e u v`` is then read as a directed edge u->v).

    +e u v            insert edge
    -e u v            delete edge
    +v d v1 ... vd    insert vertex with d neighbors
    -v u              delete vertex
    ? v               In-MIS query
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StreamParseError


@dataclass(frozen=True)
class InsertEdge:
    u: int
    v: int


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class InsertVertex:
    neighbors: tuple[int, ...] = ()


@dataclass(frozen=True)
class DeleteVertex:
    v: int


@dataclass(frozen=True)
class QueryInMis:
    v: int


UpdateEvent = InsertEdge | DeleteEdge | InsertVertex | DeleteVertex | QueryInMis


@dataclass
class UpdateStream:
    n: int = 0
    flow: tuple[int, int] | None = None
    events: list[UpdateEvent] = field(default_factory=list)

    def is_incremental(self) -> bool:
        return not any(isinstance(e, (DeleteEdge, DeleteVertex)) for e in self.events)

    def has_queries(self) -> bool:
        return any(isinstance(e, QueryInMis) for e in self.events)


def parse_stream(text: str) -> UpdateStream:
    stream = UpdateStream()
    seen_event = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "n" and len(tok) == 2:
                if seen_event:
                    raise StreamParseError(line_no, "header after events")
                stream.n = _nonneg(tok[1], line_no)
                continue
            if tok[0] == "flow" and len(tok) == 3:
                if seen_event:
                    raise StreamParseError(line_no, "header after events")
                stream.flow = (_nonneg(tok[1], line_no), _nonneg(tok[2], line_no))
                continue
            seen_event = True
            if tok[0] == "+e" and len(tok) == 3:
                stream.events.append(InsertEdge(_nonneg(tok[1], line_no), _nonneg(tok[2], line_no)))
            elif tok[0] == "-e" and len(tok) == 3:
                stream.events.append(DeleteEdge(_nonneg(tok[1], line_no), _nonneg(tok[2], line_no)))
            elif tok[0] == "+v" and len(tok) >= 2:
                d = _nonneg(tok[1], line_no)
                nbrs = tuple(_nonneg(t, line_no) for t in tok[2:])
                if len(nbrs) != d:
                    raise StreamParseError(line_no, f"expected {d} neighbors, got {len(nbrs)}")
                stream.events.append(InsertVertex(nbrs))
            elif tok[0] == "-v" and len(tok) == 2:
                stream.events.append(DeleteVertex(_nonneg(tok[1], line_no)))
            elif tok[0] == "?" and len(tok) == 2:
                stream.events.append(QueryInMis(_nonneg(tok[1], line_no)))
            else:
                raise StreamParseError(line_no, f"unrecognized event {line!r}")
        except StreamParseError:
            raise
        except IndexError:
            raise StreamParseError(line_no, f"truncated line {line!r}") from None
    return stream


def serialize_stream(stream: UpdateStream) -> str:
    lines: list[str] = []
    if stream.n:
        lines.append(f"n {stream.n}")
    if stream.flow is not None:
        lines.append(f"flow {stream.flow[0]} {stream.flow[1]}")
    for e in stream.events:
        if isinstance(e, InsertEdge):
            lines.append(f"+e {e.u} {e.v}")
        elif isinstance(e, DeleteEdge):
            lines.append(f"-e {e.u} {e.v}")
        elif isinstance(e, InsertVertex):
            lines.append("+v " + " ".join([str(len(e.neighbors))] + [str(w) for w in e.neighbors]))
        elif isinstance(e, DeleteVertex):
            lines.append(f"-v {e.v}")
        else:
            lines.append(f"? {e.v}")
    return "\n".join(lines) + "\n"


def _nonneg(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise StreamParseError(line_no, f"expected integer, got {token!r}") from None
    if value < 0:
        raise StreamParseError(line_no, f"negative id {value}")
    return value
