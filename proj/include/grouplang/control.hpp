#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grouplang {

class ControlSyntaxError : public std::invalid_argument {
public:
    ControlSyntaxError(std::string msg, std::size_t pos)
        : std::invalid_argument(std::move(msg)), position(pos) {}
    std::size_t position;
};

// Regular expression over table names. Concatenation is juxtaposition,
// '|' is union, '*' is Kleene star, parentheses group. The empty-set
// regex has no surface syntax and is only built programmatically.
struct ControlRegex {
    enum class Kind { EmptySet, Epsilon, Symbol, Concat, Union, Star };

    Kind kind = Kind::Epsilon;
    std::string symbol;               // Kind::Symbol
    std::vector<ControlRegex> parts;  // children (Star has exactly one)

    static ControlRegex empty_set();
    static ControlRegex epsilon();
    static ControlRegex sym(std::string name);
    static ControlRegex concat(std::vector<ControlRegex> parts);
    static ControlRegex alt(std::vector<ControlRegex> parts);
    static ControlRegex star(ControlRegex inner);

    bool operator==(const ControlRegex& o) const;
};

ControlRegex parse_control_regex(std::string_view text);
std::string to_string(const ControlRegex& re);
// Distinct table names referenced by the expression, in first-use order.
std::vector<std::string> control_symbols(const ControlRegex& re);
ControlRegex rename_control_symbols(const ControlRegex& re,
                                    const std::map<std::string, std::string>& renames);

// Deterministic automaton over table indices, compiled from a ControlRegex.
// States that cannot reach an accepting state are removed, so `start < 0`
// means the control language is empty.
class ControlAutomaton {
public:
    ControlAutomaton() = default;
    // `symbol_index` maps each name used by `re` to a dense label id.
    static ControlAutomaton compile(const ControlRegex& re,
                                    const std::map<std::string, int>& symbol_index,
                                    int num_labels);

    int start() const { return start_; }
    int num_states() const { return static_cast<int>(accepting_.size()); }
    int next(int state, int label) const { return next_[state][label]; }
    bool accepting(int state) const { return accepting_[state]; }
    bool accepts(std::span<const int> labels) const;
    bool empty_language() const { return start_ < 0; }

private:
    std::vector<std::vector<int>> next_; // -1 = dead
    std::vector<bool> accepting_;
    int start_ = -1;
};

} // namespace grouplang
