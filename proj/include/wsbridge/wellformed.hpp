#pragma once

#include <string>
#include <vector>

#include "wsbridge/ast.hpp"

namespace wsbridge {

struct Diagnostic {
    std::string code;
    std::string message;
    Span span;
};

// Post-parse well-formedness pass. The reused C-style expression component
// happily parses ++i and i++; both are rejected here with code WS001.
// An empty result means the module is well-formed.
std::vector<Diagnostic> check_wellformed(const Module& module);

inline constexpr const char* kDiagIncrementNotAllowed = "WS001";

}  // namespace wsbridge
