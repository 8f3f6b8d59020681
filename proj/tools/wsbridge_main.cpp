#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "wsbridge/corpus.hpp"
#include "wsbridge/frontend.hpp"

namespace {

using namespace wsbridge;

constexpr int kExitOk = 0;
constexpr int kExitCorpusFailures = 1;
constexpr int kExitPipelineError = 2;
constexpr int kExitDiagnostics = 3;

LexerConfig config_from_env() {
    LexerConfig cfg;
    if (const char* var = std::getenv("WSBRIDGE_TABSTOP")) {
        char* end = nullptr;
        long value = std::strtol(var, &end, 10);
        if (end != var && *end == '\0' && value >= 1) {
            cfg.indent_policy.tab_stop = static_cast<int>(value);
        }
    }
    return cfg;
}

int report_error(const std::string& path, const FrontendError& err) {
    std::cerr << format_diagnostic(path, err) << "\n";
    return kExitPipelineError;
}

int cmd_tokens(const std::string& path, bool processed, const LexerConfig& cfg) {
    try {
        std::string source = read_text_file(path);
        std::vector<Token> tokens;
        if (processed) {
            tokens = processed_stream(source, cfg);
        } else {
            tokens = lex(source, cfg);
        }
        for (const Token& t : tokens) {
            std::cout << debug_line(t) << "\n";
        }
        return kExitOk;
    } catch (const FrontendError& err) {
        return report_error(path, err);
    }
}

int cmd_parse(const std::string& path, const std::string& format, bool check,
              const LexerConfig& cfg) {
    try {
        std::string source = read_text_file(path);
        ComponentRegistry registry = build_minipython_registry();
        Module module = parse_source(source, cfg, registry);
        if (format == "sexpr") {
            std::cout << to_sexpr(module) << "\n";
        } else {
            std::cout << to_json_string(module) << "\n";
        }
        if (check) {
            std::vector<Diagnostic> diagnostics = check_wellformed(module);
            for (const Diagnostic& d : diagnostics) {
                std::cerr << path << ':' << d.span.start.line << ':' << d.span.start.column
                          << ": " << d.code << ' ' << d.message << "\n";
            }
            if (!diagnostics.empty()) {
                return kExitDiagnostics;
            }
        }
        return kExitOk;
    } catch (const FrontendError& err) {
        return report_error(path, err);
    }
}

int cmd_render(const std::string& path, const LexerConfig& cfg) {
    try {
        std::string source = read_text_file(path);
        std::cout << render_delimited_source(source, cfg);
        return kExitOk;
    } catch (const FrontendError& err) {
        return report_error(path, err);
    }
}

int cmd_corpus(const std::string& dir, bool report, const LexerConfig& cfg) {
    CorpusReport result = run_corpus(dir, cfg);
    for (const CorpusFileResult& file : result.files) {
        if (file.passed) {
            std::cout << "PASS " << file.path.generic_string() << "\n";
        } else {
            std::cout << "FAIL " << file.path.generic_string() << " " << file.code << "\n";
        }
    }
    int percent = result.total == 0
                      ? 100
                      : static_cast<int>(100.0 * result.passed / result.total + 0.5);
    std::cout << "parsed " << result.passed << "/" << result.total << " files (" << percent
              << "%)\n";
    if (report) {
        std::map<std::string, int> by_code;
        for (const CorpusFileResult& file : result.files) {
            if (!file.passed) {
                ++by_code[file.code];
            }
        }
        for (const auto& [code, count] : by_code) {
            std::cout << "  " << code << ": " << count << "\n";
        }
    }
    return result.passed == result.total ? kExitOk : kExitCorpusFailures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whitespace-sensitive frontend pipeline for Mini-Python"};
    app.require_subcommand(1);

    LexerConfig cfg = config_from_env();

    std::string path;
    bool processed = false;
    bool raw = false;
    CLI::App* tokens = app.add_subcommand("tokens", "Dump the token stream of a file");
    tokens->add_option("path", path, "source file")->required();
    tokens->add_flag("--raw", raw, "raw lexer output");
    tokens->add_flag("--processed", processed, "post-preprocessing stream");

    std::string format = "json";
    bool check = false;
    CLI::App* parse = app.add_subcommand("parse", "Parse a file and print its AST");
    parse->add_option("path", path, "source file")->required();
    parse->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "sexpr"}));
    parse->add_flag("--check", check, "run the well-formedness check");

    CLI::App* render = app.add_subcommand("render", "Print the delimited form of a file");
    render->add_option("path", path, "source file")->required();

    std::string dir;
    bool report = false;
    CLI::App* corpus = app.add_subcommand("corpus", "Parse every corpus file under a directory");
    corpus->add_option("dir", dir, "corpus directory")->required();
    corpus->add_flag("--report", report, "print a per-code failure breakdown");

    CLI11_PARSE(app, argc, argv);

    if (tokens->parsed()) {
        return cmd_tokens(path, processed && !raw, cfg);
    }
    if (parse->parsed()) {
        return cmd_parse(path, format, check, cfg);
    }
    if (render->parsed()) {
        return cmd_render(path, cfg);
    }
    return cmd_corpus(dir, report, cfg);
}
