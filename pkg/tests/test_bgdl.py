from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boardforge import SiteType, TilingKind
from boardforge.bgdl import (BoardNode, OperatorNode, TilingNode, build, elaborate, parse, strip, to_text,
                             tokenize)
from boardforge.errors import (ArityError, LexError, ParamTypeError, UnbalancedParens, UnexpectedToken,
                               UnknownKeyword, UnsupportedKeyword)


def _kinds(text):
    return [(t.kind, t.value) for t in tokenize(text)]


@pytest.mark.parametrize("text, want", [
    ("(hex 4)", [("LPAREN", "("), ("SYMBOL", "hex"), ("INT", 4), ("RPAREN", ")"), ("EOF", None)]),
    ("use:Vertex", [("KEYVAL", ("use", "Vertex")), ("EOF", None)]),
    ("{3 0}", [("LBRACE", "{"), ("INT", 3), ("INT", 0), ("RBRACE", "}"), ("EOF", None)]),
    ("-1.5 // note", [("REAL", -1.5), ("EOF", None)]),
    ("vertices:{", [("KEY", "vertices"), ("LBRACE", "{"), ("EOF", None)]),
])
def test_tokenize(text, want):
    assert _kinds(text) == want


def test_token_spans_cross_lines():
    toks = tokenize("(board\n  (square 8))")
    assert [t.span for t in toks[:4]] == [(1, 1), (1, 2), (2, 3), (2, 4)]


@pytest.mark.parametrize("text, span", [("(hex 4 #)", (1, 8)), ("(square 8x)", (1, 9)), ("\n  @", (2, 3))])
def test_lex_errors(text, span):
    with pytest.raises(LexError) as info:
        tokenize(text)
    assert info.value.span == span


def test_unclosed_reports_eof():
    with pytest.raises(UnbalancedParens) as info:
        parse("(board (square 8)")
    assert info.value.span == (1, 18)


@pytest.mark.parametrize("text, exc", [
    ("(board (square 8)))", UnbalancedParens),
    ("(square 8}", UnbalancedParens),
    ("(hex 4) (hex 5)", UnexpectedToken),
    ("", UnexpectedToken),
    ("(remove cells: 3)", UnexpectedToken),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse(text)


def test_elaborate_nested_operators():
    node = elaborate("(dual (subdivide (tiling T3464 2) min:6))")
    assert isinstance(node, OperatorNode) and node.op == "dual"
    (sub,) = node.children
    assert sub.op == "subdivide" and sub.param("min") == 6
    (tiling,) = sub.children
    assert tiling == TilingNode(TilingKind.T3464, (2,))


def test_board_use_reaches_tiling():
    node = elaborate("(board (square 19) use:Vertex)")
    assert isinstance(node, BoardNode) and node.use_site == SiteType.Vertex


@pytest.mark.parametrize("text, exc, span", [
    ("(square)", ArityError, (1, 1)),
    ("(board (squre 8))", UnknownKeyword, (1, 8)),
    ("(board (spiral 3))", UnsupportedKeyword, (1, 8)),
    ("(dual (square 3) use:Vertex)", ParamTypeError, (1, 18)),
    ("(board (square 3) use:Corner)", ParamTypeError, (1, 23)),
    ("(square 3.5)", ParamTypeError, None),
    ("(board (board (square 2)))", ParamTypeError, None),
    ("(merge (square 2))", ArityError, (1, 1)),
    ("(rotate (square 2))", ArityError, (1, 1)),
])
def test_elaboration_errors(text, exc, span):
    with pytest.raises(exc) as info:
        elaborate(text)
    if span is not None:
        assert info.value.span == span


def test_unsupported_keyword_names_itself():
    with pytest.raises(UnsupportedKeyword) as info:
        elaborate("(board (celtic 3))")
    assert "celtic" in str(info.value)


@pytest.mark.parametrize("text, counts", [
    ("(board (square 8))", (81, 144, 64)),
    ("(board (hex 2))", (24, 30, 7)),
    ("(board (tri 2))", (6, 9, 4)),
    ("(board (rectangle 2 3))", (12, 17, 6)),
    ("(board (square (square 3)))", (16, 24, 9)),
    ("(dual (square 3))", (9, 12, 4)),
    ("(merge (square 2) (shift (square 2) 2 0))", (15, 22, 8)),
    ("(remove (square 2) cells:{0})", (9, 12, 3)),
])
def test_evaluate_counts(text, counts):
    assert build(text).counts == counts


def test_go_board_plays_on_vertices():
    g = build("(board (square 19) use:Vertex)")
    assert g.default_site == SiteType.Vertex
    assert g.counts[0] == 19 * 19


def test_comments_and_layout_ignored():
    a = build("// a small board\n(board\n  (square 3)  // three by three\n)")
    assert a.counts == build("(board (square 3))").counts


def test_error_span_from_geometry():
    with pytest.raises(Exception) as info:
        build("(board (hole (square 4) (hexagon 2)))")
    assert getattr(info.value, "span", None) is not None


# hypothesis: printing then re-reading any tree gives the same tree

_symbols = st.sampled_from(["board", "square", "hex", "dual", "Vertex", "T3464", "x_1"])
_atoms = st.one_of(
    _symbols,
    st.integers(-999, 999).map(str),
    st.decimals(-99, 99, places=2, allow_nan=False, allow_infinity=False).map(
        lambda d: format(d, "f") if "." in format(d, "f") else format(d, "f") + ".0"),
)


def _trees():
    return st.recursive(
        _atoms,
        lambda inner: st.one_of(
            st.lists(inner, max_size=4).map(lambda xs: "(" + " ".join(xs) + ")"),
            st.lists(inner, max_size=4).map(lambda xs: "{" + " ".join(xs) + "}"),
            st.tuples(_symbols, inner.filter(lambda x: ":" not in x.split("(")[0].split("{")[0])).map(
                lambda kv: f"{kv[0]}:{kv[1]}"),
        ),
        max_leaves=12,
    ).map(lambda body: f"({body})")


@settings(max_examples=80, deadline=None)
@given(_trees())
def test_print_parse_round_trip(text):
    node = parse(text)
    again = parse(to_text(node))
    assert strip(again) == strip(node)
    assert to_text(again) == to_text(node)
