#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsbridge/token.hpp"

namespace wsbridge {

enum class ErrorCode {
    UnterminatedString,
    InvalidCharacter,
    TabsDisallowed,
    IndentMismatch,
    ParseError,
    NoStatementParser,
    CompositionConflict,
    UnbalancedStream,
    IoError,
};

const char* error_code_name(ErrorCode code);

// Hard pipeline failure: lexing, preprocessing, parsing or rendering.
// Well-formedness findings are diagnostics, not errors (see wellformed.hpp).
class FrontendError : public std::runtime_error {
  public:
    FrontendError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    FrontendError(ErrorCode code, SourcePos pos, std::string message)
        : std::runtime_error(std::move(message)), code_(code), pos_(pos) {}

    ErrorCode code() const { return code_; }
    const std::optional<SourcePos>& pos() const { return pos_; }

  private:
    ErrorCode code_;
    std::optional<SourcePos> pos_;
};

class ParseError : public FrontendError {
  public:
    ParseError(SourcePos pos, std::string message, std::vector<TokenKind> expected, Token found)
        : FrontendError(ErrorCode::ParseError, pos, std::move(message)),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    ParseError(ErrorCode code, SourcePos pos, std::string message, Token found)
        : FrontendError(code, pos, std::move(message)), found_(std::move(found)) {}

    const std::vector<TokenKind>& expected() const { return expected_; }
    const Token& found() const { return found_; }

  private:
    std::vector<TokenKind> expected_;
    Token found_;
};

// path:line:col: CODE message  (line/col omitted when the error has no position)
std::string format_diagnostic(const std::string& path, const FrontendError& err);

}  // namespace wsbridge
