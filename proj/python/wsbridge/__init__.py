"""Whitespace-sensitive frontend pipeline for Mini-Python.

The heavy lifting lives in the compiled ``_core`` extension; this package
just re-exports its surface.
"""

from wsbridge._core import (
    Channel,
    Diagnostic,
    FrontendError,
    Token,
    __version__,
    check,
    parse_delimited_sexpr,
    parse_json,
    parse_sexpr,
    parser_tokens,
    processed_tokens,
    raw_tokens,
    render_delimited,
)

__all__ = [
    "Channel",
    "Diagnostic",
    "FrontendError",
    "Token",
    "__version__",
    "check",
    "parse_delimited_sexpr",
    "parse_json",
    "parse_sexpr",
    "parser_tokens",
    "processed_tokens",
    "raw_tokens",
    "render_delimited",
]
