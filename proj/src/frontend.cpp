#include "wsbridge/frontend.hpp"

namespace wsbridge {

Module parse_source(const std::string& source, const LexerConfig& cfg,
                    const ComponentRegistry& registry) {
    Pipeline pipeline(source, cfg);
    PipelineTokenSource tokens(pipeline);
    return parse_module(tokens, registry, cfg.indent_policy);
}

Module parse_delimited_text(const std::string& text, LexerConfig cfg,
                            const ComponentRegistry& registry) {
    cfg.recognize_control_glyphs = true;
    std::vector<Token> visible;
    for (Token& t : lex(text, cfg)) {
        if (t.channel == Channel::Default) {
            visible.push_back(std::move(t));
        }
    }
    return parse_module(std::move(visible), registry, cfg.indent_policy);
}

std::string render_delimited_source(const std::string& source, const LexerConfig& cfg) {
    Pipeline pipeline(source, cfg);
    return render_delimited(pipeline.full_stream(), cfg.control_tokens);
}

}  // namespace wsbridge
