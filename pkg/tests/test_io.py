import pytest

from condlat import catalog
from condlat.errors import ParseError
from condlat.io import (
    FrameDocument,
    LatticeDocument,
    SelectionDocument,
    frame_dot,
    lattice_dot,
    load_document,
    parse_frame,
    parse_lattice,
    parse_selection,
    serialize_frame,
    serialize_lattice,
    serialize_selection,
)

LATTICE_TEXT = """\
# comment lines and blank lines are skipped

lattice demo
elements 0 a b 1
cover 0 a
cover 0 b
cover a 1
cover b 1
op -> 1 1 1 1 ; 0 1 0 1 ; p 1 1 1 ; 0 a b 1
"""


def test_parse_lattice_with_table():
    # replace the deliberate bad token first
    text = LATTICE_TEXT.replace("p 1 1 1", "b b 1 1")
    doc = parse_lattice(text)
    assert doc.name == "demo"
    assert doc.lattice.names == ("0", "a", "b", "1")
    assert doc.lattice.covers() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert doc.conditional.table[1] == (0, 3, 0, 3)
    assert doc.unary is None


def test_parse_lattice_unknown_name_has_line_number():
    with pytest.raises(ParseError) as info:
        parse_lattice(LATTICE_TEXT)
    assert "line 9" in str(info.value)
    assert info.value.line == 9


def test_parse_lattice_leq_and_cover_mix():
    text = (
        "lattice mix\nelements 0 m 1\ncover 0 m\nleq m 1\nleq 0 1\n"
    )
    doc = parse_lattice(text)
    assert doc.lattice.leq(0, 2) and doc.lattice.top == 2


def test_parse_rejections():
    with pytest.raises(ParseError):
        parse_lattice("elements a b\n")  # no header
    with pytest.raises(ParseError):
        parse_lattice("lattice x\ncover 0 1\n")  # covers before elements
    with pytest.raises(ParseError):
        parse_lattice("lattice x\nelements a;b\n")  # reserved char in name
    with pytest.raises(ParseError):
        parse_lattice("lattice x\nelements a b\nop -> a a\n")  # missing row sep
    with pytest.raises(ParseError):
        load_document("widget x\n")
    with pytest.raises(ParseError):
        load_document("   \n# only comments\n")


@pytest.mark.parametrize("entry", catalog.ENTRIES, ids=lambda e: e.name)
def test_lattice_round_trip_catalog_wide(entry):
    doc = LatticeDocument(entry.name, entry.lattice, entry.conditional, entry.unary)
    text = serialize_lattice(doc)
    back = parse_lattice(text)
    assert back.name == entry.name
    assert back.lattice.names == entry.lattice.names
    assert [back.lattice.leq(a, b) for a in range(back.lattice.n)
            for b in range(back.lattice.n)] == [
        entry.lattice.leq(a, b) for a in range(entry.lattice.n)
        for b in range(entry.lattice.n)
    ]
    assert back.conditional.table == entry.conditional.table
    if entry.unary is not None:
        assert back.unary.table == entry.unary.table
    # serialize -> parse -> serialize is a fixed point
    assert serialize_lattice(back) == text


def test_frame_round_trip(quad_frame):
    doc = FrameDocument("quad", quad_frame)
    text = serialize_frame(doc)
    back = parse_frame(text)
    assert back.frame.names == quad_frame.names
    assert back.frame.edges() == quad_frame.edges()
    assert serialize_frame(back) == text


def test_frame_edge_direction():
    doc = parse_frame("frame f\npoints a b\nedge a b\n")
    assert doc.frame.related(0, 1) and not doc.frame.related(1, 0)


def test_frame_reflexive_directive():
    doc = parse_frame("frame f\npoints a b\nreflexive\nedge a b\n")
    assert doc.frame.related(0, 0) and doc.frame.related(1, 1)


@pytest.mark.parametrize("entry", catalog.SELECTION_ENTRIES, ids=lambda e: e.name)
def test_selection_round_trip_catalog_wide(entry):
    doc = SelectionDocument(entry.name, entry.frame, ())
    text = serialize_selection(doc)
    back = parse_selection(text)
    assert back.frame.rel == entry.frame.rel
    assert back.defaulted == ()
    assert serialize_selection(back) == text


def test_selection_unlisted_subsets_default_to_bare_centering():
    text = "selframe partial\nworlds a b\nrel * : a,a b,b\n"
    doc = parse_selection(text)
    # {a}, {b}, and the empty set were not listed
    assert set(doc.defaulted) == {0b00, 0b01, 0b10}
    # bare centering: members select themselves, outsiders select nothing
    assert doc.frame.rel[0b01] == (0b01, 0)
    assert doc.frame.rel[0b10] == (0, 0b10)
    assert doc.frame.rel[0b00] == (0, 0)
    assert doc.frame.rel[0b11] == (0b01, 0b10)


def test_selection_duplicate_subset_rejected():
    text = "selframe d\nworlds a\nrel a : a,a\nrel a : a,a\n"
    with pytest.raises(ParseError, match="duplicate"):
        parse_selection(text)


def test_dot_outputs(quad_frame):
    e = catalog.entry("sasaki-M4")
    dot = lattice_dot(e.lattice, "m4")
    assert dot.startswith('digraph "m4"')
    # one arrow per covering pair
    assert dot.count("->") == len(e.lattice.covers())
    fdot = frame_dot(quad_frame, "quad")
    assert fdot.count("->") == len(quad_frame.edges())


def test_load_document_dispatch(quad_frame):
    e = catalog.entry("meet-2chain")
    lat_text = serialize_lattice(LatticeDocument("x", e.lattice, e.conditional, None))
    assert isinstance(load_document(lat_text), LatticeDocument)
    frame_text = serialize_frame(FrameDocument("q", quad_frame))
    assert isinstance(load_document(frame_text), FrameDocument)
    sel = catalog.selection_entry("well-order-3")
    sel_text = serialize_selection(SelectionDocument("w", sel.frame, ()))
    assert isinstance(load_document(sel_text), SelectionDocument)
