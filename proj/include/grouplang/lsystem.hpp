#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grouplang/alphabet.hpp"
#include "grouplang/control.hpp"

namespace grouplang {

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DeterminismError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A table of parallel rewriting rules. A symbol without an explicit rule
// rewrites to itself (the identity convention); a table is deterministic
// iff no symbol carries two distinct alternatives.
struct Table {
    std::string name;
    // alternatives[id]: explicit replacements for that symbol, in insertion
    // order without exact duplicates. Empty vector = implicit identity rule.
    std::vector<std::vector<Word>> alternatives;

    bool has_rule(SymbolId id) const {
        return id < alternatives.size() && !alternatives[id].empty();
    }
    bool deterministic() const {
        for (const auto& alts : alternatives)
            if (alts.size() > 1) return false;
        return true;
    }
    bool operator==(const Table& o) const {
        return name == o.name && alternatives == o.alternatives;
    }
};

struct SearchCaps {
    std::size_t max_sentential_length = 256;
    std::size_t max_control_length = 64;
    std::size_t max_visited = 1'000'000;

    void validate() const {
        if (max_sentential_length == 0 || max_control_length == 0 || max_visited == 0)
            throw ValidationError("search caps must be positive");
    }
};

enum class ExecPolicy { Serial, Parallel };

struct EnumerationResult {
    std::set<std::string> words; // rendered terminal words
    bool exhaustive = false;
    std::size_t visited_pairs = 0;
    std::size_t levels = 0;
};

// A checkable certificate: replaying `steps` from `axiom` must reproduce each
// sentential form, the table-name sequence must lie in the control language,
// and the final word must be terminal.
struct DerivationWitness {
    std::string axiom;
    std::vector<std::pair<std::string, std::string>> steps; // (table name, form)
    std::string final_word;

    std::string control_word() const;
    std::string to_text() const;
};

struct VerifyResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

enum class Verdict { Yes, No, Unknown };

struct MemberResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<DerivationWitness> witness;
};

class LSystem;

// Incremental construction with one validation point in build().
class LSystemBuilder {
public:
    LSystemBuilder& alphabet(const std::vector<std::string>& tokens);
    LSystemBuilder& terminals(const std::vector<std::string>& tokens);
    LSystemBuilder& axiom(std::string_view word_text);
    LSystemBuilder& table(std::string name);
    LSystemBuilder& rule(std::string_view lhs_token, std::string_view rhs_text);
    LSystemBuilder& control(std::string_view regex_text);
    LSystemBuilder& control(ControlRegex re);
    LSystem build();

private:
    friend class LSystem;
    Alphabet alphabet_;
    std::vector<std::string> terminal_tokens_;
    std::vector<std::string> axiom_texts_;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> tables_;
    std::optional<ControlRegex> control_;
};

// An ET0L system: extended alphabet, terminal subalphabet, finite axiom set,
// named tables and a rational control language over table names. Immutable
// after construction and safe to share across threads.
class LSystem {
public:
    explicit LSystem(LSystemBuilder&& b);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& axioms() const { return axioms_; }
    const std::vector<Table>& tables() const { return tables_; }
    const Table* find_table(std::string_view name) const;
    const ControlRegex& control() const { return control_; }
    const ControlAutomaton& automaton() const { return dfa_; }

    bool is_terminal(SymbolId id) const { return terminal_[id]; }
    bool is_terminal_word(const Word& w) const;
    std::vector<std::string> terminal_tokens() const;
    bool deterministic() const;

    // True if the symbol can derive the empty word under some table sequence.
    bool erasable(SymbolId id) const { return erasable_[id]; }
    std::size_t nonerasable_count(const Word& w) const;

    std::string render(const Word& w) const { return alphabet_.render(w); }
    Word parse_word(std::string_view text) const { return alphabet_.parse_word(text); }

    // One parallel rewriting step: every result obtainable by choosing one
    // rule (or the implicit identity) per position.
    std::set<Word> step(const Word& w, const Table& t) const;
    // The unique step result of a deterministic table; a monoid homomorphism.
    Word apply_deterministic(const Word& w, const Table& t) const;

    // Breadth-first search over (control state, sentential form) pairs.
    // `exhaustive` is true iff the frontier was fully explored before any cap
    // was hit; then words = L(H) restricted to length <= max_word_length.
    EnumerationResult enumerate(std::size_t max_word_length, const SearchCaps& caps = {},
                                ExecPolicy policy = ExecPolicy::Serial) const;

    // Three-valued membership. Yes carries a verifiable witness. No is only
    // reported after full exhaustion of the (soundly pruned) search space.
    MemberResult member(const Word& terminal_word, const SearchCaps& caps = {}) const;
    MemberResult member_text(std::string_view word_text, const SearchCaps& caps = {}) const;

    VerifyResult verify(const DerivationWitness& witness) const;

    bool operator==(const LSystem& o) const;

private:
    friend LSystem union_systems(const LSystem&, const LSystem&);
    friend LSystem concat_systems(const LSystem&, const LSystem&);

    void compute_erasable();
    int table_index(std::string_view name) const;

    Alphabet alphabet_;
    std::vector<bool> terminal_;
    std::vector<Word> axioms_;
    std::vector<Table> tables_;
    ControlRegex control_;
    ControlAutomaton dfa_;
    std::vector<bool> erasable_;
};

// AFL combinators: language union and concatenation, realized by fresh
// per-side symbol copies, per-axiom seed tables and decode tables, with the
// terminal alphabets merged by token equality.
LSystem union_systems(const LSystem& a, const LSystem& b);
LSystem concat_systems(const LSystem& a, const LSystem& b);

// {word} as a one-word language: the word itself is the axiom and the
// control accepts exactly the empty table sequence.
LSystem literal_system(const std::vector<std::string>& alphabet_tokens,
                       std::string_view word_text);

} // namespace grouplang
