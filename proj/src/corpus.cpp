#include "wsbridge/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wsbridge/frontend.hpp"

namespace wsbridge {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FrontendError(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw FrontendError(ErrorCode::IoError, "cannot read " + path.string());
    }
    return std::move(buf).str();
}

CorpusFileResult run_corpus_file(const std::filesystem::path& path, const LexerConfig& cfg) {
    CorpusFileResult result;
    result.path = path;
    try {
        std::string source = read_text_file(path);
        static const ComponentRegistry registry = build_minipython_registry();
        Module module = parse_source(source, cfg, registry);
        std::vector<Diagnostic> diagnostics = check_wellformed(module);
        if (!diagnostics.empty()) {
            result.code = diagnostics.front().code;
            result.message = diagnostics.front().message;
            result.pos = diagnostics.front().span.start;
            return result;
        }
        result.passed = true;
    } catch (const FrontendError& err) {
        result.code = error_code_name(err.code());
        result.message = err.what();
        result.pos = err.pos();
    }
    return result;
}

CorpusReport run_corpus(const std::filesystem::path& dir, const LexerConfig& cfg) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(dir)) {
        for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == kCorpusExtension) {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());

    CorpusReport report;
    for (const auto& path : files) {
        report.files.push_back(run_corpus_file(path, cfg));
        report.passed += report.files.back().passed ? 1 : 0;
    }
    report.total = static_cast<int>(report.files.size());
    return report;
}

std::optional<std::string> read_expected_code(const std::filesystem::path& corpus_file) {
    std::filesystem::path sidecar = corpus_file;
    sidecar += ".expect";
    std::ifstream in(sidecar);
    if (!in) {
        return std::nullopt;
    }
    std::string line;
    while (std::getline(in, line)) {
        constexpr std::string_view prefix = "expect:";
        if (line.starts_with(prefix)) {
            std::string code = line.substr(prefix.size());
            code.erase(0, code.find_first_not_of(" \t"));
            code.erase(code.find_last_not_of(" \t\r") + 1);
            return code;
        }
    }
    return std::nullopt;
}

}  // namespace wsbridge
