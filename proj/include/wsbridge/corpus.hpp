#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wsbridge/lexer.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

inline constexpr const char* kCorpusExtension = ".mpy";

struct CorpusFileResult {
    std::filesystem::path path;
    bool passed = false;
    std::string code;     // error or diagnostic code when failed
    std::string message;  // human-readable detail
    std::optional<SourcePos> pos;
};

struct CorpusReport {
    std::vector<CorpusFileResult> files;  // sorted by path
    int passed = 0;
    int total = 0;
};

// Parses every corpus file under `dir` (recursively) with the Mini-Python
// registry and runs the well-formedness check on top; a file passes only
// when it parses cleanly and carries no diagnostics.
CorpusReport run_corpus(const std::filesystem::path& dir, const LexerConfig& cfg);

// Runs a single file; never throws, failures are encoded in the result.
CorpusFileResult run_corpus_file(const std::filesystem::path& path, const LexerConfig& cfg);

// Reads the `<file>.expect` sidecar next to a corpus file: a single
// `expect: CODE` line naming the error code the file must fail with.
std::optional<std::string> read_expected_code(const std::filesystem::path& corpus_file);

std::string read_text_file(const std::filesystem::path& path);  // throws IoError

}  // namespace wsbridge
