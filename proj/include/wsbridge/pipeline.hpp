#pragma once

#include <string>
#include <vector>

#include "wsbridge/dispatcher.hpp"
#include "wsbridge/lexer.hpp"
#include "wsbridge/preprocessor.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

// The frontend pipeline: lexer output is routed token by token through the
// mode dispatcher, whitespace-sensitive tokens pass the indent preprocessor,
// and everything is merged back into the single stream the parser consumes.
// The parser pulls; the dispatch/preprocess stages run lazily.
class Pipeline {
  public:
    // Lexes eagerly (the indent lookahead needs random access) and rejects
    // input whose first content line is indented: there is no statement such
    // a block could belong to.
    Pipeline(const std::string& source, LexerConfig cfg);

    // Next DEFAULT-channel token. Hidden tokens are retained internally but
    // never returned here. Returns EOF forever once exhausted.
    Token next_parser_token();

    // The complete post-preprocessing stream, hidden tokens and all, in
    // emission order. Drains the remaining input; pull position for
    // next_parser_token is unaffected.
    const std::vector<Token>& full_stream();

    const LexerConfig& config() const { return cfg_; }

  private:
    void step();

    LexerConfig cfg_;
    std::vector<Token> raw_;
    std::size_t cursor_ = 0;
    DispatcherState dispatcher_;
    IndentState indent_;
    std::vector<Token> processed_;
    std::size_t read_pos_ = 0;
};

// One-shot helpers over a fresh pipeline.
std::vector<Token> processed_stream(const std::string& source, const LexerConfig& cfg);
std::vector<Token> parser_stream(const std::string& source, const LexerConfig& cfg);

}  // namespace wsbridge
