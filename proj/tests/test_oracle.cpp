#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "support/progen.hpp"
#include "support/testutil.hpp"
#include "wsbridge/pipeline.hpp"

using namespace wsbridge;
using namespace wsbridge::testing;

namespace {

std::string oracle_str(const std::string& source) {
    return boundaries_to_string(oracle_boundaries(source));
}

std::string stream_str(const std::string& source) {
    return boundaries_to_string(stream_boundaries(processed_stream(source, LexerConfig{})));
}

}  // namespace

TEST_CASE("flat two-statement file") {
    CHECK(oracle_str("a\nb\n") == "C(1) SE C(1) SE");
}

TEST_CASE("single nested block") {
    CHECK(oracle_str("if a:\n  b\n") == "C(3) BS C(1) SE BE");
}

TEST_CASE("double dedent") {
    CHECK(oracle_str("if a:\n  if b:\n    c\nd\n") ==
          "C(3) BS C(3) BS C(1) SE BE BE C(1) SE");
}

TEST_CASE("oracle mirrors the preprocessor's IndentMismatch") {
    CHECK_THROWS_AS(oracle_boundaries("if a:\n   b\n  c\n"), FrontendError);
    CHECK_THROWS_AS(oracle_boundaries("  a\n"), FrontendError);
}

TEST_CASE("oracle agrees with the pipeline on handcrafted edge cases") {
    const std::string sources[] = {
        "",
        "a\n",
        "a",
        "pass\n\n\n",
        "# leading comment\n\nx = 1\n",
        "if a:\n\tb = 1\n",                       // tab indentation
        "if a:\n  \tb = 1\n",                     // mixed space+tab
        "x = 1 + \\\n    2\ny = 3\n",             // continuation
        "x = 1 + \\\n2\n",                        // continuation to column 0
        "if a:\n  x = 1 + \\\n 2\n  y = 2\n",     // continuation inside a block
        "if a:\n  b\n  # comment at depth\n  c\n",
        "if a:\n  b\n# comment at zero\n  c\n",   // comment shallower than block
        "if a:\n  if b:\n    c\n  d\ne\n",
        "while a:\n      x\nwhile b:\n  y\n",
        "a = 'str with # inside'\n",
        "x\n   \n\t\ny\n",                        // whitespace-only lines
    };
    for (const std::string& src : sources) {
        CAPTURE(src);
        CHECK(stream_str(src) == oracle_str(src));
    }
}

TEST_CASE("oracle equivalence on generated programs") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 60; ++i) {
        std::string src = generate_program(rng);
        CAPTURE(src);
        CHECK(stream_str(src) == oracle_str(src));
    }
}
