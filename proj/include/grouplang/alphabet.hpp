#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grouplang {

// Symbols are interned per alphabet; a word stores one id byte per symbol.
using SymbolId = std::uint8_t;
using Word = std::string;

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A finite ordered alphabet of distinct tokens. Tokens are compared by exact
// string equality and identify symbols globally (across systems).
class Alphabet {
public:
    // A token is valid if nonempty, free of whitespace and of the reserved
    // characters '~', '(', ')', '|', '*', ':' and does not contain "->".
    static bool valid_token(std::string_view token, std::string* why = nullptr);

    SymbolId add(std::string token);
    std::optional<SymbolId> find(std::string_view token) const;
    SymbolId id(std::string_view token) const;
    const std::string& token(SymbolId id) const { return tokens_.at(id); }
    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    bool contains(std::string_view token) const { return find(token).has_value(); }
    bool all_single_char() const { return all_single_char_; }

    // Rendering: words made only of single-character tokens print as plain
    // strings, otherwise tokens are joined with single spaces. The empty word
    // renders as "".
    std::string render(const Word& w) const;
    // Accepts both spaced token sequences and (for single-char alphabets)
    // plain concatenated strings.
    Word parse_word(std::string_view text) const;

    bool valid_word(const Word& w) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
    bool all_single_char_ = true;
};

} // namespace grouplang
