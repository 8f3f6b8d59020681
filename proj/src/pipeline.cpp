#include "wsbridge/pipeline.hpp"

namespace wsbridge {

Pipeline::Pipeline(const std::string& source, LexerConfig cfg)
    : cfg_(std::move(cfg)), raw_(lex(source, cfg_)) {
    IndentScan first = scan_next_content_line(raw_, cfg_.indent_policy);
    if (first.indent && *first.indent > 0) {
        throw FrontendError(ErrorCode::IndentMismatch, first.line_start,
                            "first content line is indented");
    }
}

void Pipeline::step() {
    const Token& t = raw_[cursor_];
    ++cursor_;
    std::span<const Token> lookahead(raw_.data() + cursor_, raw_.size() - cursor_);
    if (dispatch(t, dispatcher_) == Route::ToBuffer) {
        // Content emitted inside an insensitive region still means the
        // current logical line is not blank.
        if (is_content_kind(t.kind)) {
            indent_.content_since_boundary = true;
        }
        processed_.push_back(t);
    } else {
        process(t, indent_, lookahead, cfg_.indent_policy, processed_);
    }
}

Token Pipeline::next_parser_token() {
    while (true) {
        if (read_pos_ < processed_.size()) {
            const Token& t = processed_[read_pos_++];
            if (t.channel == Channel::Default) {
                return t;
            }
            continue;
        }
        if (cursor_ >= raw_.size()) {
            return processed_.back();  // sticky EOF
        }
        step();
    }
}

const std::vector<Token>& Pipeline::full_stream() {
    while (cursor_ < raw_.size()) {
        step();
    }
    return processed_;
}

std::vector<Token> processed_stream(const std::string& source, const LexerConfig& cfg) {
    Pipeline p(source, cfg);
    return p.full_stream();
}

std::vector<Token> parser_stream(const std::string& source, const LexerConfig& cfg) {
    Pipeline p(source, cfg);
    std::vector<Token> out;
    for (const Token& t : p.full_stream()) {
        if (t.channel == Channel::Default) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace wsbridge
