#pragma once

#include <string>

#include "wsbridge/ast.hpp"
#include "wsbridge/parser.hpp"
#include "wsbridge/pipeline.hpp"
#include "wsbridge/registry.hpp"
#include "wsbridge/serializer.hpp"
#include "wsbridge/wellformed.hpp"

namespace wsbridge {

// Lets the parser pull straight from a live pipeline.
class PipelineTokenSource : public TokenSource {
  public:
    explicit PipelineTokenSource(Pipeline& pipeline) : pipeline_(pipeline) {}
    Token next() override { return pipeline_.next_parser_token(); }

  private:
    Pipeline& pipeline_;
};

// Whitespace-sensitive path: full pipeline, then parse.
Module parse_source(const std::string& source, const LexerConfig& cfg,
                    const ComponentRegistry& registry);

// Delimited-input path: lex with control glyphs enabled and parse directly,
// no whitespace preprocessing involved.
Module parse_delimited_text(const std::string& text, LexerConfig cfg,
                            const ComponentRegistry& registry);

// Pipeline + serializer in one step.
std::string render_delimited_source(const std::string& source, const LexerConfig& cfg);

}  // namespace wsbridge
