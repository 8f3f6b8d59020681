#include <doctest.h>

#include "support/testutil.hpp"

using namespace wsbridge;
using namespace wsbridge::testing;

namespace {

std::vector<Diagnostic> diagnose(const std::string& source) {
    Module m = parse_source(source, LexerConfig{}, minipython());
    return check_wellformed(m);
}

}  // namespace

TEST_CASE("prefix increment is flagged with WS001") {
    std::vector<Diagnostic> d = diagnose("x = ++i\n");
    REQUIRE(d.size() == 1);
    CHECK(d[0].code == "WS001");
    CHECK(d[0].span.start == SourcePos{1, 4});
    CHECK(d[0].span.end == SourcePos{1, 7});
}

TEST_CASE("plain code is well-formed") {
    CHECK(diagnose("x = i\n").empty());
    CHECK(diagnose("y = a + b * 2\nif y > 0:\n    pass\n").empty());
}

TEST_CASE("both increment forms in one statement give two diagnostics") {
    std::vector<Diagnostic> d = diagnose("y = a++ + ++b\n");
    REQUIRE(d.size() == 2);
    CHECK(d[0].code == "WS001");
    CHECK(d[1].code == "WS001");
    CHECK(d[0].span.start.column < d[1].span.start.column);
}

TEST_CASE("increments are found in nested structures") {
    CHECK(diagnose("if a:\n    while b:\n        x = i++\n").size() == 1);
    CHECK(diagnose("f(++a, [b++])\n").size() == 2);
    CHECK(diagnose("def f(x):\n    return ++x\n").size() == 1);
}
