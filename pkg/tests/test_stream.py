import pytest

from dynamis import (
    DeleteEdge,
    DeleteVertex,
    InsertEdge,
    InsertVertex,
    QueryInMis,
    UpdateStream,
    parse_stream,
    serialize_stream,
)
from dynamis.errors import StreamParseError


def test_parse_edge_events():
    s = parse_stream("+e 0 1\n-e 0 1")
    assert s.events == [InsertEdge(0, 1), DeleteEdge(0, 1)]


def test_parse_query():
    s = parse_stream("? 3")
    assert s.events == [QueryInMis(3)]


def test_parse_truncated_line():
    with pytest.raises(StreamParseError) as exc:
        parse_stream("+e 0")
    assert exc.value.line_no == 1


def test_parse_headers_and_comments():
    text = "# a comment\nn 5\nflow 0 4\n+e 0 4  # inline\n"
    s = parse_stream(text)
    assert s.n == 5
    assert s.flow == (0, 4)
    assert s.events == [InsertEdge(0, 4)]


def test_header_after_event_rejected():
    with pytest.raises(StreamParseError):
        parse_stream("+e 0 1\nn 5")


def test_parse_vertex_events():
    s = parse_stream("+v 2 0 1\n-v 3\n+v 0")
    assert s.events == [InsertVertex((0, 1)), DeleteVertex(3), InsertVertex(())]


def test_vertex_count_mismatch():
    with pytest.raises(StreamParseError):
        parse_stream("+v 2 0")


def test_negative_id_rejected():
    with pytest.raises(StreamParseError):
        parse_stream("+e -1 2")


def test_unknown_event_rejected():
    with pytest.raises(StreamParseError) as exc:
        parse_stream("+e 0 1\n*x 1 2")
    assert exc.value.line_no == 2


def test_round_trip_identity():
    s = UpdateStream(
        n=6,
        events=[
            InsertEdge(0, 1),
            InsertVertex((0, 2)),
            QueryInMis(4),
            DeleteEdge(0, 1),
            DeleteVertex(2),
            InsertVertex(()),
        ],
    )
    assert parse_stream(serialize_stream(s)) == s


def test_round_trip_flow_header():
    s = UpdateStream(n=3, flow=(0, 2), events=[InsertEdge(0, 2)])
    assert parse_stream(serialize_stream(s)) == s


def test_is_incremental():
    assert UpdateStream(events=[InsertEdge(0, 1), InsertVertex(())]).is_incremental()
    assert not UpdateStream(events=[DeleteEdge(0, 1)]).is_incremental()
    assert not UpdateStream(events=[DeleteVertex(0)]).is_incremental()


def test_has_queries():
    assert UpdateStream(events=[QueryInMis(0)]).has_queries()
    assert not UpdateStream(events=[InsertEdge(0, 1)]).has_queries()
