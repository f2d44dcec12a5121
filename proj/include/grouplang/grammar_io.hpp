#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grouplang/lsystem.hpp"

namespace grouplang {

class GrammarParseError : public std::runtime_error {
public:
    GrammarParseError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Plain-text, line-oriented grammar format:
//
//   alphabet: tok tok ...
//   terminals: tok tok ...
//   axiom: tok tok ...          (repeatable; no tokens = empty axiom)
//   table NAME:
//     lhs -> rhs tokens         (indented; '~' alone denotes the empty word)
//   control: REGEX
//
// Duplicate rule lines under one table accumulate as nondeterministic
// alternatives.
LSystem parse_grammar(std::string_view text);
LSystem parse_grammar_file(const std::string& path);
std::string print_grammar(const LSystem& sys);

} // namespace grouplang
