"""Smoke tests for the python bindings."""

import pytest

import wsbridge


def kinds(tokens):
    return [t.kind for t in tokens]


def test_parser_tokens_inject_statement_end():
    toks = wsbridge.parser_tokens("x = 1\n")
    assert kinds(toks) == ["NAME", "ASSIGN", "INT", "STMT_END", "EOF"]
    assert toks[0].lexeme == "x"
    assert toks[0].line == 1 and toks[0].col == 0


def test_processed_tokens_keep_hidden_channel():
    toks = wsbridge.processed_tokens("x = 1\n")
    assert kinds(toks) == ["NAME", "WS", "ASSIGN", "WS", "INT", "STMT_END", "NEWLINE", "EOF"]
    assert toks[1].channel == wsbridge.Channel.HIDDEN


def test_raw_tokens_are_lossless():
    src = "if a:\n\tb = 'x'  # note\n"
    assert "".join(t.lexeme for t in wsbridge.raw_tokens(src)) == src


def test_parse_sexpr():
    assert wsbridge.parse_sexpr("pass\n") == "(module (pass))"
    assert (
        wsbridge.parse_sexpr("if 1 < 2:\n    x = 1\n")
        == "(module (if (compare < (int 1) (int 2)) (block (assign = (name x) (int 1)))))"
    )


def test_parse_json_mentions_types_and_spans():
    out = wsbridge.parse_json("pass\n")
    assert '"type": "Pass"' in out
    assert '"span"' in out


def test_tab_stop_is_configurable():
    default = wsbridge.raw_tokens("\tx\n")
    narrow = wsbridge.raw_tokens("\tx\n", tab_stop=4)
    assert default[1].col == 8
    assert narrow[1].col == 4


def test_render_round_trips_through_delimited_form():
    src = "def f(a):\n    return a + 1\ny = f(1)\n"
    rendered = wsbridge.render_delimited(src)
    assert "\u2983" in rendered and "\u2984" in rendered and "\u204f" in rendered
    assert wsbridge.parse_delimited_sexpr(rendered) == wsbridge.parse_sexpr(src)


def test_check_flags_increments():
    diags = wsbridge.check("x = ++i\n")
    assert [d.code for d in diags] == ["WS001"]
    assert diags[0].line == 1 and diags[0].col == 4
    assert wsbridge.check("x = i\n") == []


def test_errors_carry_codes():
    with pytest.raises(wsbridge.FrontendError) as err:
        wsbridge.parse_sexpr("if a:\n   x\n  y\n")
    assert "IndentMismatch" in str(err.value)

    with pytest.raises(wsbridge.FrontendError):
        wsbridge.raw_tokens("s = 'open\n")
