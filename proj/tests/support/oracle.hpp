#pragma once

#include <string>
#include <vector>

#include "wsbridge/errors.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge::testing {

// Reference model of indentation tokenization, deliberately line-based and
// sharing no code with the streaming pipeline. Covers the indentation-only
// fragment: no triple-quoted strings, no brackets spanning line breaks, no
// '#' inside string literals.

enum class BoundaryKind { Content, StmtEnd, BlockStart, BlockEnd };

struct BoundaryEvent {
    BoundaryKind kind = BoundaryKind::Content;
    int content_tokens = 0;  // only meaningful for Content

    friend bool operator==(const BoundaryEvent&, const BoundaryEvent&) = default;
};

std::vector<BoundaryEvent> oracle_boundaries(const std::string& source,
                                             const IndentPolicy& policy = {});

// The comparable event view of a full post-preprocessing stream: runs of
// parser-visible content tokens collapse to Content(n), control tokens map
// to their events, everything else is ignored.
std::vector<BoundaryEvent> stream_boundaries(const std::vector<Token>& stream);

std::string boundaries_to_string(const std::vector<BoundaryEvent>& events);

}  // namespace wsbridge::testing
