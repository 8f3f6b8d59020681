#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsbridge/corpus.hpp"
#include "wsbridge/frontend.hpp"

namespace py = pybind11;
using namespace wsbridge;

namespace {

LexerConfig make_config(int tab_stop, bool allow_tabs, bool recognize_control_glyphs) {
    LexerConfig cfg;
    cfg.indent_policy.tab_stop = tab_stop;
    cfg.indent_policy.allow_tabs = allow_tabs;
    cfg.recognize_control_glyphs = recognize_control_glyphs;
    return cfg;
}

const ComponentRegistry& registry() {
    static const ComponentRegistry reg = build_minipython_registry();
    return reg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Whitespace-sensitive frontend pipeline for Mini-Python";

    // Messages are prefixed with the stable error code, e.g.
    // "IndentMismatch: dedent to column 2 matches no open block".
    static py::exception<FrontendError> frontend_error(m, "FrontendError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const FrontendError& e) {
            std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
            PyErr_SetString(frontend_error.ptr(), msg.c_str());
        }
    });

    py::enum_<Channel>(m, "Channel")
        .value("DEFAULT", Channel::Default)
        .value("HIDDEN", Channel::Hidden);

    py::class_<Token>(m, "Token")
        .def_property_readonly("kind", [](const Token& t) { return std::string(kind_name(t.kind)); })
        .def_readonly("lexeme", &Token::lexeme)
        .def_property_readonly("channel", [](const Token& t) { return t.channel; })
        .def_property_readonly("line", [](const Token& t) { return t.pos.line; })
        .def_property_readonly("col", [](const Token& t) { return t.pos.column; })
        .def("__repr__", [](const Token& t) { return debug_line(t); });

    py::class_<Diagnostic>(m, "Diagnostic")
        .def_readonly("code", &Diagnostic::code)
        .def_readonly("message", &Diagnostic::message)
        .def_property_readonly("line", [](const Diagnostic& d) { return d.span.start.line; })
        .def_property_readonly("col", [](const Diagnostic& d) { return d.span.start.column; })
        .def("__repr__", [](const Diagnostic& d) {
            return d.code + " at " + std::to_string(d.span.start.line) + ":" +
                   std::to_string(d.span.start.column) + ": " + d.message;
        });

    m.def(
        "raw_tokens",
        [](const std::string& source, int tab_stop, bool allow_tabs, bool delimited) {
            return lex(source, make_config(tab_stop, allow_tabs, delimited));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        py::arg("delimited") = false,
        "Lexer output, including hidden whitespace/comment/newline tokens.");

    m.def(
        "processed_tokens",
        [](const std::string& source, int tab_stop, bool allow_tabs) {
            return processed_stream(source, make_config(tab_stop, allow_tabs, false));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        "Full post-preprocessing stream with injected control tokens.");

    m.def(
        "parser_tokens",
        [](const std::string& source, int tab_stop, bool allow_tabs) {
            return parser_stream(source, make_config(tab_stop, allow_tabs, false));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        "The DEFAULT-channel tokens the parser consumes.");

    m.def(
        "parse_json",
        [](const std::string& source, int tab_stop, bool allow_tabs, int indent) {
            return to_json_string(
                parse_source(source, make_config(tab_stop, allow_tabs, false), registry()),
                indent);
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        py::arg("indent") = 2, "Parse and return the AST as a JSON string.");

    m.def(
        "parse_sexpr",
        [](const std::string& source, int tab_stop, bool allow_tabs) {
            return to_sexpr(
                parse_source(source, make_config(tab_stop, allow_tabs, false), registry()));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        "Parse and return the AST in compact s-expression form.");

    m.def(
        "parse_delimited_sexpr",
        [](const std::string& text, int tab_stop) {
            return to_sexpr(
                parse_delimited_text(text, make_config(tab_stop, true, true), registry()));
        },
        py::arg("text"), py::arg("tab_stop") = 8,
        "Parse delimited-form text (explicit control glyphs, no preprocessing).");

    m.def(
        "check",
        [](const std::string& source, int tab_stop, bool allow_tabs) {
            return check_wellformed(
                parse_source(source, make_config(tab_stop, allow_tabs, false), registry()));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        "Parse and run the well-formedness check; returns diagnostics.");

    m.def(
        "render_delimited",
        [](const std::string& source, int tab_stop, bool allow_tabs) {
            return render_delimited_source(source, make_config(tab_stop, allow_tabs, false));
        },
        py::arg("source"), py::arg("tab_stop") = 8, py::arg("allow_tabs") = true,
        "Serialize the preprocessed stream back to delimited character form.");

    m.attr("__version__") = "0.1.0";
}
