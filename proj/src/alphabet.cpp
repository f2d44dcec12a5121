#include "grouplang/alphabet.hpp"

#include <cctype>
#include <sstream>

namespace grouplang {

bool Alphabet::valid_token(std::string_view token, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (token.empty()) return fail("empty token");
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)))
            return fail("token contains whitespace");
        switch (c) {
        case '~': case '(': case ')': case '|': case '*': case ':':
            return fail(std::string("token contains reserved character '") + c + "'");
        default: break;
        }
    }
    if (token.find("->") != std::string_view::npos)
        return fail("token contains reserved sequence \"->\"");
    return true;
}

SymbolId Alphabet::add(std::string token) {
    std::string why;
    if (!valid_token(token, &why)) throw AlphabetError("bad symbol token: " + why);
    if (index_.count(token)) throw AlphabetError("duplicate symbol token: " + token);
    if (tokens_.size() >= 255) throw AlphabetError("alphabet too large");
    SymbolId id = static_cast<SymbolId>(tokens_.size());
    if (token.size() > 1) all_single_char_ = false;
    index_.emplace(token, id);
    tokens_.push_back(std::move(token));
    return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::id(std::string_view token) const {
    auto got = find(token);
    if (!got) throw AlphabetError("unknown symbol token: " + std::string(token));
    return *got;
}

std::string Alphabet::render(const Word& w) const {
    bool single = true;
    for (char c : w) {
        const auto idx = static_cast<unsigned char>(c);
        if (idx >= tokens_.size()) throw AlphabetError("word contains out-of-range symbol id");
        if (tokens_[idx].size() > 1) single = false;
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += tokens_[static_cast<unsigned char>(w[i])];
    }
    return out;
}

Word Alphabet::parse_word(std::string_view text) const {
    Word out;
    if (text.empty()) return out;
    const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (spaced) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) out.push_back(static_cast<char>(id(tok)));
        return out;
    }
    // Unspaced: prefer a whole-token match, then per-character parsing.
    if (auto whole = find(text)) {
        out.push_back(static_cast<char>(*whole));
        return out;
    }
    for (char c : text) out.push_back(static_cast<char>(id(std::string_view(&c, 1))));
    return out;
}

bool Alphabet::valid_word(const Word& w) const {
    for (char c : w)
        if (static_cast<unsigned char>(c) >= tokens_.size()) return false;
    return true;
}

} // namespace grouplang
