#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/testutil.hpp"
#include "wsbridge/corpus.hpp"

using namespace wsbridge;

namespace fs = std::filesystem;

TEST_CASE("bundled positive corpus parses completely") {
    CorpusReport report = run_corpus(fs::path(WSBRIDGE_CORPUS_DIR) / "positive", LexerConfig{});
    CHECK(report.total >= 40);
    for (const CorpusFileResult& file : report.files) {
        CAPTURE(file.path.string());
        CAPTURE(file.message);
        CHECK(file.passed);
    }
    CHECK(report.passed == report.total);
}

TEST_CASE("bundled negative corpus fails with the declared codes") {
    CorpusReport report = run_corpus(fs::path(WSBRIDGE_CORPUS_DIR) / "negative", LexerConfig{});
    CHECK(report.total >= 10);
    CHECK(report.passed == 0);
    for (const CorpusFileResult& file : report.files) {
        CAPTURE(file.path.string());
        std::optional<std::string> expected = read_expected_code(file.path);
        REQUIRE(expected.has_value());
        CHECK(file.code == *expected);
    }
}

TEST_CASE("expect sidecar parsing") {
    fs::path dir = fs::temp_directory_path() / "wsbridge_corpus_tests";
    fs::create_directories(dir);
    fs::path file = dir / "sample.mpy";
    std::ofstream(file) << "x = 1\n";
    fs::remove(fs::path(file) += ".expect");  // leftovers from earlier runs

    CHECK(read_expected_code(file) == std::nullopt);
    std::ofstream(fs::path(file) += ".expect") << "expect:   IndentMismatch  \n";
    CHECK(read_expected_code(file) == "IndentMismatch");
}

TEST_CASE("unreadable corpus files fail with an IO code") {
    LexerConfig cfg;
    CorpusFileResult result = run_corpus_file("/nonexistent/nowhere.mpy", cfg);
    CHECK_FALSE(result.passed);
    CHECK(result.code == "IoError");
}
