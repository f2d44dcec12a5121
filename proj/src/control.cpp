#include "grouplang/control.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace grouplang {

namespace {

bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '|' &&
           c != '*';
}

} // namespace

ControlRegex ControlRegex::empty_set() { return ControlRegex{Kind::EmptySet, {}, {}}; }
ControlRegex ControlRegex::epsilon() { return ControlRegex{Kind::Epsilon, {}, {}}; }

ControlRegex ControlRegex::sym(std::string name) {
    return ControlRegex{Kind::Symbol, std::move(name), {}};
}

ControlRegex ControlRegex::concat(std::vector<ControlRegex> parts) {
    std::vector<ControlRegex> flat;
    for (auto& p : parts) {
        if (p.kind == Kind::EmptySet) return empty_set();
        if (p.kind == Kind::Epsilon) continue;
        if (p.kind == Kind::Concat)
            for (auto& q : p.parts) flat.push_back(std::move(q));
        else
            flat.push_back(std::move(p));
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return std::move(flat.front());
    return ControlRegex{Kind::Concat, {}, std::move(flat)};
}

ControlRegex ControlRegex::alt(std::vector<ControlRegex> parts) {
    std::vector<ControlRegex> flat;
    for (auto& p : parts) {
        if (p.kind == Kind::EmptySet) continue;
        if (p.kind == Kind::Union)
            for (auto& q : p.parts) flat.push_back(std::move(q));
        else
            flat.push_back(std::move(p));
    }
    if (flat.empty()) return empty_set();
    if (flat.size() == 1) return std::move(flat.front());
    return ControlRegex{Kind::Union, {}, std::move(flat)};
}

ControlRegex ControlRegex::star(ControlRegex inner) {
    if (inner.kind == Kind::EmptySet || inner.kind == Kind::Epsilon) return epsilon();
    if (inner.kind == Kind::Star) return inner;
    ControlRegex out{Kind::Star, {}, {}};
    out.parts.push_back(std::move(inner));
    return out;
}

bool ControlRegex::operator==(const ControlRegex& o) const {
    return kind == o.kind && symbol == o.symbol && parts == o.parts;
}

namespace {

struct RegexParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }

    ControlRegex parse_union() {
        std::vector<ControlRegex> arms;
        arms.push_back(parse_concat());
        while (!eof() && peek() == '|') {
            ++pos;
            arms.push_back(parse_concat());
        }
        return ControlRegex::alt(std::move(arms));
    }

    ControlRegex parse_concat() {
        std::vector<ControlRegex> items;
        while (!eof() && peek() != '|' && peek() != ')') items.push_back(parse_factor());
        return ControlRegex::concat(std::move(items));
    }

    ControlRegex parse_factor() {
        ControlRegex base = parse_base();
        while (!eof() && peek() == '*') {
            ++pos;
            base = ControlRegex::star(std::move(base));
        }
        return base;
    }

    ControlRegex parse_base() {
        skip_ws();
        if (pos >= text.size()) throw ControlSyntaxError("unexpected end of control regex", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ControlRegex inner = parse_union();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw ControlSyntaxError("missing ')' in control regex", pos);
            ++pos;
            return inner;
        }
        if (c == '*' || c == '|' || c == ')')
            throw ControlSyntaxError(std::string("unexpected '") + c + "' in control regex", pos);
        std::size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        return ControlRegex::sym(std::string(text.substr(start, pos - start)));
    }
};

int precedence(ControlRegex::Kind k) {
    switch (k) {
    case ControlRegex::Kind::Union: return 0;
    case ControlRegex::Kind::Concat: return 1;
    default: return 2;
    }
}

void print_regex(const ControlRegex& re, int min_prec, std::string& out) {
    const bool parens = precedence(re.kind) < min_prec;
    if (parens) out += '(';
    switch (re.kind) {
    case ControlRegex::Kind::EmptySet:
        throw std::logic_error("the empty-set control regex has no textual form");
    case ControlRegex::Kind::Epsilon:
        out += "()";
        break;
    case ControlRegex::Kind::Symbol:
        out += re.symbol;
        break;
    case ControlRegex::Kind::Concat:
        for (std::size_t i = 0; i < re.parts.size(); ++i) {
            if (i) out += ' ';
            print_regex(re.parts[i], 2, out);
        }
        break;
    case ControlRegex::Kind::Union:
        for (std::size_t i = 0; i < re.parts.size(); ++i) {
            if (i) out += '|';
            print_regex(re.parts[i], 1, out);
        }
        break;
    case ControlRegex::Kind::Star:
        print_regex(re.parts.front(), 2, out);
        out += '*';
        break;
    }
    if (parens) out += ')';
}

void collect_symbols(const ControlRegex& re, std::vector<std::string>& out) {
    if (re.kind == ControlRegex::Kind::Symbol) {
        if (std::find(out.begin(), out.end(), re.symbol) == out.end()) out.push_back(re.symbol);
        return;
    }
    for (const auto& p : re.parts) collect_symbols(p, out);
}

} // namespace

ControlRegex parse_control_regex(std::string_view text) {
    RegexParser parser{text};
    if (parser.eof()) return ControlRegex::epsilon();
    ControlRegex re = parser.parse_union();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ControlSyntaxError("trailing input in control regex", parser.pos);
    return re;
}

std::string to_string(const ControlRegex& re) {
    std::string out;
    print_regex(re, 0, out);
    return out;
}

std::vector<std::string> control_symbols(const ControlRegex& re) {
    std::vector<std::string> out;
    collect_symbols(re, out);
    return out;
}

ControlRegex rename_control_symbols(const ControlRegex& re,
                                    const std::map<std::string, std::string>& renames) {
    ControlRegex out = re;
    if (out.kind == ControlRegex::Kind::Symbol) {
        auto it = renames.find(out.symbol);
        if (it != renames.end()) out.symbol = it->second;
        return out;
    }
    for (auto& p : out.parts) p = rename_control_symbols(p, renames);
    return out;
}

namespace {

// Thompson construction. State -1 below is used as "no state".
struct Nfa {
    struct State {
        std::vector<std::pair<int, int>> edges; // (label, target)
        std::vector<int> eps;
    };
    std::vector<State> states;

    int add() {
        states.emplace_back();
        return static_cast<int>(states.size()) - 1;
    }

    // Returns (in, out) fragment endpoints; returns in = -1 for the empty set.
    std::pair<int, int> build(const ControlRegex& re, const std::map<std::string, int>& idx) {
        switch (re.kind) {
        case ControlRegex::Kind::EmptySet: {
            int a = add(), b = add();
            return {a, b}; // no path from a to b
        }
        case ControlRegex::Kind::Epsilon: {
            int a = add(), b = add();
            states[a].eps.push_back(b);
            return {a, b};
        }
        case ControlRegex::Kind::Symbol: {
            int a = add(), b = add();
            states[a].edges.emplace_back(idx.at(re.symbol), b);
            return {a, b};
        }
        case ControlRegex::Kind::Concat: {
            auto frag = build(re.parts.front(), idx);
            for (std::size_t i = 1; i < re.parts.size(); ++i) {
                auto next = build(re.parts[i], idx);
                states[frag.second].eps.push_back(next.first);
                frag.second = next.second;
            }
            return frag;
        }
        case ControlRegex::Kind::Union: {
            int a = add(), b = add();
            for (const auto& p : re.parts) {
                auto frag = build(p, idx);
                states[a].eps.push_back(frag.first);
                states[frag.second].eps.push_back(b);
            }
            return {a, b};
        }
        case ControlRegex::Kind::Star: {
            int a = add(), b = add();
            auto frag = build(re.parts.front(), idx);
            states[a].eps.push_back(frag.first);
            states[a].eps.push_back(b);
            states[frag.second].eps.push_back(frag.first);
            states[frag.second].eps.push_back(b);
            return {a, b};
        }
        }
        throw std::logic_error("unreachable");
    }
};

} // namespace

ControlAutomaton ControlAutomaton::compile(const ControlRegex& re,
                                           const std::map<std::string, int>& symbol_index,
                                           int num_labels) {
    Nfa nfa;
    auto [in, out] = nfa.build(re, symbol_index);

    auto closure = [&](std::set<int> s) {
        std::deque<int> work(s.begin(), s.end());
        while (!work.empty()) {
            int q = work.front();
            work.pop_front();
            for (int t : nfa.states[q].eps)
                if (s.insert(t).second) work.push_back(t);
        }
        return s;
    };

    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    ControlAutomaton dfa;
    auto intern = [&](std::set<int> s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        ids.emplace(s, id);
        subsets.push_back(std::move(s));
        dfa.next_.emplace_back(num_labels, -1);
        dfa.accepting_.push_back(subsets.back().count(out) > 0);
        return id;
    };

    int start = intern(closure({in}));
    for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
        for (int label = 0; label < num_labels; ++label) {
            std::set<int> moved;
            for (int s : subsets[q])
                for (auto [l, t] : nfa.states[s].edges)
                    if (l == label) moved.insert(t);
            if (moved.empty()) continue;
            dfa.next_[q][label] = intern(closure(std::move(moved)));
        }
    }

    // Drop states that cannot reach an accepting state.
    const int n = static_cast<int>(subsets.size());
    std::vector<bool> useful(n, false);
    bool changed = true;
    for (int q = 0; q < n; ++q) useful[q] = dfa.accepting_[q];
    while (changed) {
        changed = false;
        for (int q = 0; q < n; ++q) {
            if (useful[q]) continue;
            for (int label = 0; label < num_labels; ++label) {
                int t = dfa.next_[q][label];
                if (t >= 0 && useful[t]) {
                    useful[q] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (int q = 0; q < n; ++q)
        for (int label = 0; label < num_labels; ++label) {
            int t = dfa.next_[q][label];
            if (t >= 0 && !useful[t]) dfa.next_[q][label] = -1;
        }
    dfa.start_ = useful[start] ? start : -1;
    return dfa;
}

bool ControlAutomaton::accepts(std::span<const int> labels) const {
    if (start_ < 0) return false;
    int q = start_;
    for (int label : labels) {
        if (label < 0 || label >= static_cast<int>(next_[q].size())) return false;
        q = next_[q][label];
        if (q < 0) return false;
    }
    return accepting_[q];
}

} // namespace grouplang
