#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zlam/term.hpp"

namespace zlam {

/// Syntax error with 1-based position and a description of what was expected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    int line;
    int column;
};

/// Parses the concrete grammar:
///   term := lam | app
///   lam  := ('\' | 'λ') var+ '.' term
///   app  := atom atom*
///   atom := var | '(' term ')'
///   var  := [a-z][A-Za-z0-9_']*
/// Application is left-associative; an abstraction body extends maximally to
/// the right; `\x y. t` abbreviates `\x.\y. t`.
TermPtr parse(const std::string& src);

/// Minimal-parenthesis rendering; parse(print(t)) is α-equivalent to t.
std::string print(const TermPtr& t);

/// Trace format: one printed term per line, each line a single β-reduct of
/// its predecessor. parse_trace only parses; validation lives in `beta`.
std::vector<TermPtr> parse_trace(const std::string& src);
std::string print_trace(const std::vector<TermPtr>& terms);

}  // namespace zlam
