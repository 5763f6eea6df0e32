#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lmu/term.hpp"

namespace lmu {

// Byte offsets into the parsed input.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message)
        : std::runtime_error(message + " at " + std::to_string(span.start)), span_(span) {}

    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

// Concrete syntax:
//
//   term := lam | mu | app
//   lam  := ("\" | "λ") IDENT "." term
//   mu   := ("mu" | "µ" | "μ") IDENT "." "[" IDENT "]" term
//   app  := atom { atom } [ lam | mu ]
//   atom := IDENT | "(" term ")"
//
// Application is left-associative and binder bodies extend as far right as
// possible, so a binder may close an application without parentheses:
// "(f) mu a.[a] x" is f applied to μa[a]x. '#' starts a line comment.
//
// Duplicate binders are renamed so the result satisfies the Barendregt
// convention.
Term parse(std::string_view input);

// Inverse of parse up to alpha-equivalence. The operator of every application
// is parenthesised, matching the "(u) v" notation: church(2) prints as
// "\x. \f. (f) ((f) x)".
std::string print(const Term& t);

}  // namespace lmu
