// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run via ctest or directly from the build tree.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "support/progen.hpp"
#include "wsbridge/corpus.hpp"
#include "wsbridge/frontend.hpp"

using namespace wsbridge;
using namespace wsbridge::testing;

namespace fs = std::filesystem;

namespace {

struct AcceptanceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& message) {
    if (!cond) {
        throw AcceptanceFailure(message);
    }
}

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    try {
        body();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        std::printf("[PASS] criterion %d: %s (%.0f ms)\n", number, title.c_str(), ms);
    } catch (const std::exception& e) {
        ++failures;
        std::printf("[FAIL] criterion %d: %s -- %s\n", number, title.c_str(), e.what());
    }
}

const fs::path kCorpusDir = WSBRIDGE_CORPUS_DIR;
const fs::path kPositiveDir = kCorpusDir / "positive";
const fs::path kNegativeDir = kCorpusDir / "negative";

const ComponentRegistry& minipython() {
    static const ComponentRegistry reg = build_minipython_registry();
    return reg;
}

std::vector<fs::path> corpus_files(const fs::path& dir, bool recursive) {
    std::vector<fs::path> files;
    if (recursive) {
        for (const auto& e : fs::recursive_directory_iterator(dir)) {
            if (e.is_regular_file() && e.path().extension() == kCorpusExtension) {
                files.push_back(e.path());
            }
        }
    } else {
        for (const auto& e : fs::directory_iterator(dir)) {
            if (e.is_regular_file() && e.path().extension() == kCorpusExtension) {
                files.push_back(e.path());
            }
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string kinds_string(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        if (!out.empty()) {
            out += ' ';
        }
        out += kind_name(t.kind);
    }
    return out;
}

// Minimal statement component for the two-statement toy language:
// PrintStatement = PRINT STRING EndStmt, with PRINT lexed as the name
// "print". Test-only; the real composition uses call syntax.
void install_print_component(ComponentRegistry& reg) {
    reg.add_statement(StatementEntry{
        "Print",
        [](TokenKind k) { return k == TokenKind::Name; },
        [](Parser& p) {
            Token kw = p.advance();
            if (kw.lexeme != "print") {
                p.fail({}, "expected 'print'");
            }
            Token value = p.expect(TokenKind::String, "print statement");
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "print statement");
            auto stmt = std::make_unique<Stmt>();
            stmt->span = Span{kw.pos, end};
            stmt->node =
                ExprStmt{std::make_unique<Expr>(Expr{Span{value.pos, end}, StrLit{value.lexeme}})};
            return stmt;
        }});
}

void criterion_1_toy_language_golden() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();

    const std::string program = "print \"Hello\"\nif 1 < 2:\n\tprint \" world\"\n";
    std::vector<Token> visible = parser_stream(program, LexerConfig{});
    require(kinds_string(visible) ==
                "NAME STRING STMT_END IF INT LT INT COLON BLOCK_START "
                "NAME STRING STMT_END BLOCK_END EOF",
            "parser-visible sequence mismatch: " + kinds_string(visible));
    require(visible[0].lexeme == "print" && visible[9].lexeme == "print",
            "PRINT tokens must carry the 'print' lexeme");
    require(visible[1].lexeme == "\"Hello\"" && visible[10].lexeme == "\" world\"",
            "string lexemes must be preserved");

    ComponentRegistry reg;
    install_basics(reg);
    install_common_literals(reg);
    install_common_expressions(reg);
    install_basic_statements(reg);
    install_print_component(reg);
    reg.bind_controls(ControlBindings{});

    Module m = parse_source(program, LexerConfig{}, reg);
    require(m.body.size() == 2, "module must hold the print and if statements");
    require(to_sexpr(*m.body[1]).starts_with("(if (compare < (int 1) (int 2))"),
            "if statement must parse per the toy grammar");

    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    require(seconds < 1.0, "criterion must finish in under one second");
}

void criterion_2_paren_insensitivity() {
    const std::string split_call = "print(\n\t\"Hello\",\n\t\t\"World\",\n\"!\"\n)\n";
    const std::string flat = "print(\"Hello\", \"World\", \"!\")\n";
    Module split = parse_source(split_call, LexerConfig{}, minipython());
    Module inline_form = parse_source(flat, LexerConfig{}, minipython());
    require(ast_equal(split, inline_form), "split call must equal its single-line flattening");

    std::vector<Token> stream = processed_stream(split_call, LexerConfig{});
    std::size_t open = 0;
    std::size_t close = 0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        if (stream[i].kind == TokenKind::LParen) {
            open = i;
        }
        if (stream[i].kind == TokenKind::RParen) {
            close = i;
        }
    }
    require(open < close, "stream must contain the parenthesized region");
    for (std::size_t i = open; i <= close; ++i) {
        require(!is_control_kind(stream[i].kind),
                "no control token may be injected inside the parentheses");
    }
}

void criterion_3_oracle_equivalence() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();

    std::mt19937 rng(30303);
    int generated = 0;
    for (int i = 0; i < 200; ++i) {
        std::string program = generate_program(rng);
        std::string streaming =
            boundaries_to_string(stream_boundaries(processed_stream(program, LexerConfig{})));
        std::string reference = boundaries_to_string(oracle_boundaries(program));
        require(streaming == reference,
                "boundary mismatch on generated program:\n" + program + "\nstream: " + streaming +
                    "\noracle: " + reference);
        ++generated;
    }
    require(generated >= 200, "at least 200 generated programs");

    std::vector<fs::path> files = corpus_files(kPositiveDir, /*recursive=*/false);
    require(files.size() >= 40,
            "need at least 40 oracle-compatible positive corpus files, found " +
                std::to_string(files.size()));
    for (const fs::path& path : files) {
        std::string source = read_text_file(path);
        std::string streaming =
            boundaries_to_string(stream_boundaries(processed_stream(source, LexerConfig{})));
        std::string reference = boundaries_to_string(oracle_boundaries(source));
        require(streaming == reference, "boundary mismatch on " + path.string());
    }

    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    require(seconds < 10.0, "oracle equivalence must finish in under ten seconds");
}

void criterion_4_balance_and_order() {
    std::mt19937 rng(40404);
    for (int i = 0; i < 1000; ++i) {
        std::string program = generate_program(rng);
        std::vector<Token> raw = lex(program, LexerConfig{});
        std::vector<Token> stream = processed_stream(program, LexerConfig{});

        int starts = 0;
        int ends = 0;
        for (const Token& t : stream) {
            starts += t.kind == TokenKind::BlockStart;
            ends += t.kind == TokenKind::BlockEnd;
            require(ends <= starts, "prefix with more BLOCK_END than BLOCK_START:\n" + program);
        }
        require(starts == ends, "unbalanced block tokens at EOF:\n" + program);

        auto content_of = [](const std::vector<Token>& tokens) {
            std::vector<std::pair<TokenKind, std::string>> out;
            for (const Token& t : tokens) {
                if (is_content_kind(t.kind)) {
                    out.emplace_back(t.kind, t.lexeme);
                }
            }
            return out;
        };
        require(content_of(raw) == content_of(stream),
                "content token subsequence changed:\n" + program);
    }
}

void criterion_5_round_trip() {
    std::vector<fs::path> files = corpus_files(kPositiveDir, /*recursive=*/true);
    require(!files.empty(), "positive corpus must not be empty");
    for (const fs::path& path : files) {
        std::string source = read_text_file(path);
        LexerConfig cfg;
        Module direct = parse_source(source, cfg, minipython());
        std::string delimited = render_delimited_source(source, cfg);
        Module back = parse_delimited_text(delimited, cfg, minipython());
        require(ast_equal(direct, back), "round trip mismatch on " + path.string());
    }
}

void criterion_6_corpus_statistics() {
    CorpusReport positive = run_corpus(kPositiveDir, LexerConfig{});
    require(positive.total >= 40, "positive corpus too small");
    require(positive.passed == positive.total,
            "positive corpus must parse 100%, got " + std::to_string(positive.passed) + "/" +
                std::to_string(positive.total));

    CorpusReport negative = run_corpus(kNegativeDir, LexerConfig{});
    require(negative.total >= 10, "negative corpus too small");
    require(negative.passed == 0, "no negative corpus file may parse");
    std::set<std::string> seen_codes;
    for (const CorpusFileResult& file : negative.files) {
        std::optional<std::string> expected = read_expected_code(file.path);
        require(expected.has_value(), "missing expect sidecar for " + file.path.string());
        require(file.code == *expected, file.path.string() + " failed with " + file.code +
                                            ", manifest declares " + *expected);
        seen_codes.insert(file.code);
    }
    for (const char* code : {"IndentMismatch", "UnterminatedString", "WS001", "ParseError"}) {
        require(seen_codes.contains(code),
                std::string("negative corpus must cover code ") + code);
    }
}

void criterion_7_multiline_string() {
    const std::string with_string =
        "def f():\n"
        "    s = \"\"\"\n"
        "dedented interior\n"
        "  partially indented\n"
        "        beyond\n"
        "\"\"\"\n"
        "    return s\n";
    const std::string with_atom =
        "def f():\n"
        "    s = \"x\"\n"
        "    return s\n";

    Module m = parse_source(with_string, LexerConfig{}, minipython());
    require(m.body.size() == 1, "module must parse to the single function");

    std::vector<BoundaryEvent> a = stream_boundaries(processed_stream(with_string, LexerConfig{}));
    std::vector<BoundaryEvent> b = stream_boundaries(processed_stream(with_atom, LexerConfig{}));
    require(a == b, "string interior must contribute no control tokens");
}

void criterion_8_modularity() {
    ComponentRegistry reduced;
    install_basics(reduced);
    install_common_literals(reduced);
    install_common_expressions(reduced);
    install_basic_statements(reduced);
    reduced.bind_controls(ControlBindings{});

    std::set<std::string> expected_failures;
    {
        std::istringstream manifest(read_text_file(kPositiveDir / "pystatements.txt"));
        std::string line;
        while (std::getline(manifest, line)) {
            if (!line.empty() && line[0] != '#') {
                expected_failures.insert(line);
            }
        }
    }
    require(!expected_failures.empty(), "pystatements manifest must not be empty");

    std::set<std::string> actual_failures;
    for (const fs::path& path : corpus_files(kPositiveDir, /*recursive=*/true)) {
        std::string source = read_text_file(path);
        try {
            parse_source(source, LexerConfig{}, reduced);
        } catch (const FrontendError& err) {
            require(err.code() == ErrorCode::NoStatementParser,
                    path.string() + " must fail with NoStatementParser, got " +
                        error_code_name(err.code()));
            actual_failures.insert(fs::relative(path, kPositiveDir).generic_string());
        }
    }
    require(actual_failures == expected_failures,
            "set of files requiring PyStatements does not match the manifest");
}

}  // namespace

int main() {
    criterion(1, "toy print-language golden stream", criterion_1_toy_language_golden);
    criterion(2, "parenthesized regions suspend indentation", criterion_2_paren_insensitivity);
    criterion(3, "oracle equivalence on generated programs and corpus",
              criterion_3_oracle_equivalence);
    criterion(4, "balance and order preservation on 1000 programs", criterion_4_balance_and_order);
    criterion(5, "round trip through the delimited form", criterion_5_round_trip);
    criterion(6, "corpus statistics with declared error codes", criterion_6_corpus_statistics);
    criterion(7, "multiline strings carry no indentation structure", criterion_7_multiline_string);
    criterion(8, "composition without PyStatements fails exactly per manifest",
              criterion_8_modularity);

    if (failures == 0) {
        std::printf("all 8 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", failures);
    }
    return failures;
}
