#include "grouplang/lsystem.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grouplang {

std::string DerivationWitness::control_word() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ' ';
        out += steps[i].first;
    }
    return out;
}

std::string DerivationWitness::to_text() const {
    std::ostringstream out;
    out << "witness: " << control_word() << '\n';
    out << "  " << axiom << '\n';
    for (const auto& [name, form] : steps) {
        (void)name;
        out << "  " << form << '\n';
    }
    return out.str();
}

LSystemBuilder& LSystemBuilder::alphabet(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) alphabet_.add(t);
    return *this;
}

LSystemBuilder& LSystemBuilder::terminals(const std::vector<std::string>& tokens) {
    terminal_tokens_ = tokens;
    return *this;
}

LSystemBuilder& LSystemBuilder::axiom(std::string_view word_text) {
    axiom_texts_.emplace_back(word_text);
    return *this;
}

LSystemBuilder& LSystemBuilder::table(std::string name) {
    tables_.emplace_back(std::move(name), std::vector<std::pair<std::string, std::string>>{});
    return *this;
}

LSystemBuilder& LSystemBuilder::rule(std::string_view lhs, std::string_view rhs) {
    if (tables_.empty()) throw ValidationError("rule added before any table");
    tables_.back().second.emplace_back(std::string(lhs), std::string(rhs));
    return *this;
}

LSystemBuilder& LSystemBuilder::control(std::string_view regex_text) {
    control_ = parse_control_regex(regex_text);
    return *this;
}

LSystemBuilder& LSystemBuilder::control(ControlRegex re) {
    control_ = std::move(re);
    return *this;
}

LSystem LSystemBuilder::build() { return LSystem(std::move(*this)); }

LSystem::LSystem(LSystemBuilder&& b) : alphabet_(std::move(b.alphabet_)) {
    if (alphabet_.size() == 0) throw ValidationError("empty alphabet");

    terminal_.assign(alphabet_.size(), false);
    for (const auto& tok : b.terminal_tokens_) {
        auto id = alphabet_.find(tok);
        if (!id) throw ValidationError("terminal token not in alphabet: " + tok);
        terminal_[*id] = true;
    }

    for (const auto& text : b.axiom_texts_) axioms_.push_back(alphabet_.parse_word(text));

    for (auto& [name, rules] : b.tables_) {
        std::string why;
        if (!Alphabet::valid_token(name, &why)) throw ValidationError("bad table name: " + why);
        if (find_table(name)) throw ValidationError("duplicate table name: " + name);
        Table t;
        t.name = name;
        t.alternatives.assign(alphabet_.size(), {});
        for (const auto& [lhs, rhs] : rules) {
            auto id = alphabet_.find(lhs);
            if (!id) throw ValidationError("rule lhs not in alphabet: " + lhs);
            Word image = alphabet_.parse_word(rhs);
            auto& alts = t.alternatives[*id];
            if (std::find(alts.begin(), alts.end(), image) == alts.end())
                alts.push_back(std::move(image));
        }
        tables_.push_back(std::move(t));
    }

    control_ = b.control_ ? std::move(*b.control_) : ControlRegex::epsilon();
    std::map<std::string, int> label_index;
    for (std::size_t i = 0; i < tables_.size(); ++i)
        label_index[tables_[i].name] = static_cast<int>(i);
    for (const auto& sym : control_symbols(control_))
        if (!label_index.count(sym))
            throw ValidationError("control references unknown table: " + sym);
    dfa_ = ControlAutomaton::compile(control_, label_index, static_cast<int>(tables_.size()));
    if (dfa_.num_states() > 250) throw ValidationError("control automaton too large");

    compute_erasable();
}

void LSystem::compute_erasable() {
    erasable_.assign(alphabet_.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : tables_) {
            for (std::size_t c = 0; c < alphabet_.size(); ++c) {
                if (erasable_[c] || !t.has_rule(static_cast<SymbolId>(c))) continue;
                for (const auto& alt : t.alternatives[c]) {
                    bool all = true;
                    for (char x : alt)
                        if (!erasable_[static_cast<unsigned char>(x)]) {
                            all = false;
                            break;
                        }
                    if (all) {
                        erasable_[c] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
}

const Table* LSystem::find_table(std::string_view name) const {
    for (const auto& t : tables_)
        if (t.name == name) return &t;
    return nullptr;
}

int LSystem::table_index(std::string_view name) const {
    for (std::size_t i = 0; i < tables_.size(); ++i)
        if (tables_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool LSystem::is_terminal_word(const Word& w) const {
    for (char c : w)
        if (!terminal_[static_cast<unsigned char>(c)]) return false;
    return true;
}

std::vector<std::string> LSystem::terminal_tokens() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (terminal_[i]) out.push_back(alphabet_.token(static_cast<SymbolId>(i)));
    return out;
}

bool LSystem::deterministic() const {
    for (const auto& t : tables_)
        if (!t.deterministic()) return false;
    return true;
}

std::size_t LSystem::nonerasable_count(const Word& w) const {
    std::size_t n = 0;
    for (char c : w)
        if (!erasable_[static_cast<unsigned char>(c)]) ++n;
    return n;
}

namespace {

constexpr std::size_t kNoCap = static_cast<std::size_t>(-1);

// Enumerates one-step rewrites of `w` under `t`, choosing one alternative (or
// the implicit identity) per position. Children whose non-erasable symbol
// count provably exceeds `ne_bound` are skipped silently (that prune is sound:
// the count never decreases along a derivation). Children longer than
// `len_cap` are skipped with *cap_hit set. `emit` returns false to abort,
// which also sets *cap_hit.
template <typename Emit>
void expand_children(const LSystem& sys, const Word& w, const Table& t, std::size_t ne_bound,
                     std::size_t len_cap, bool* cap_hit, Emit&& emit) {
    const std::size_t m = w.size();
    // Suffix minima for pruning partial expansions early.
    std::vector<std::size_t> min_len(m + 1, 0), min_ne(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
        const auto c = static_cast<SymbolId>(static_cast<unsigned char>(w[i]));
        std::size_t best_len = 1, best_ne = sys.erasable(c) ? 0 : 1;
        if (t.has_rule(c)) {
            best_len = kNoCap;
            best_ne = kNoCap;
            for (const auto& alt : t.alternatives[c]) {
                best_len = std::min(best_len, alt.size());
                best_ne = std::min(best_ne, sys.nonerasable_count(alt));
            }
        }
        min_len[i] = min_len[i + 1] + best_len;
        min_ne[i] = min_ne[i + 1] + best_ne;
    }

    Word prefix;
    prefix.reserve(std::min(len_cap, m * 4 + 8));
    bool aborted = false;

    auto rec = [&](auto&& self, std::size_t pos, std::size_t ne_so_far) -> void {
        if (aborted) return;
        if (ne_so_far + min_ne[pos] > ne_bound) return; // sound prune
        if (len_cap != kNoCap && prefix.size() + min_len[pos] > len_cap) {
            *cap_hit = true;
            return;
        }
        if (pos == m) {
            if (!emit(prefix)) {
                *cap_hit = true;
                aborted = true;
            }
            return;
        }
        const auto c = static_cast<SymbolId>(static_cast<unsigned char>(w[pos]));
        auto try_alt = [&](const Word& alt) {
            const std::size_t keep = prefix.size();
            prefix += alt;
            self(self, pos + 1, ne_so_far + sys.nonerasable_count(alt));
            prefix.resize(keep);
        };
        if (t.has_rule(c)) {
            for (const auto& alt : t.alternatives[c]) {
                if (aborted) return;
                try_alt(alt);
            }
        } else {
            Word identity(1, static_cast<char>(c));
            try_alt(identity);
        }
    };
    rec(rec, 0, 0);
}

std::string pair_key(int state, const Word& w) {
    std::string key;
    key.reserve(w.size() + 1);
    key.push_back(static_cast<char>(state));
    key += w;
    return key;
}

} // namespace

std::set<Word> LSystem::step(const Word& w, const Table& t) const {
    if (!alphabet_.valid_word(w)) throw AlphabetError("word contains symbols outside the alphabet");
    std::set<Word> out;
    bool cap_hit = false;
    expand_children(*this, w, t, kNoCap, kNoCap, &cap_hit, [&](const Word& child) {
        out.insert(child);
        return true;
    });
    return out;
}

Word LSystem::apply_deterministic(const Word& w, const Table& t) const {
    if (!alphabet_.valid_word(w)) throw AlphabetError("word contains symbols outside the alphabet");
    if (!t.deterministic())
        throw DeterminismError("table '" + t.name + "' is not deterministic");
    Word out;
    for (char cc : w) {
        const auto c = static_cast<SymbolId>(static_cast<unsigned char>(cc));
        if (t.has_rule(c))
            out += t.alternatives[c].front();
        else
            out.push_back(cc);
    }
    return out;
}

EnumerationResult LSystem::enumerate(std::size_t max_word_length, const SearchCaps& caps,
                                     ExecPolicy policy) const {
    caps.validate();
    EnumerationResult res;
    if (dfa_.empty_language()) {
        res.exhaustive = true;
        return res;
    }

    std::unordered_set<std::string> visited;
    std::vector<std::pair<int, Word>> frontier;
    bool cap_hit = false;

    auto consider = [&](int state, const Word& w) {
        auto [it, fresh] = visited.insert(pair_key(state, w));
        (void)it;
        if (!fresh) return;
        if (dfa_.accepting(state) && w.size() <= max_word_length && is_terminal_word(w))
            res.words.insert(render(w));
        frontier.emplace_back(state, w);
    };

    for (const auto& ax : axioms_) {
        // Sound skip: every terminal descendant is at least as long as the
        // non-erasable symbol count, which never decreases.
        if (nonerasable_count(ax) > max_word_length) continue;
        if (ax.size() > caps.max_sentential_length) {
            cap_hit = true;
            continue;
        }
        consider(dfa_.start(), ax);
    }

    const int num_tables = static_cast<int>(tables_.size());
    std::size_t level = 0;
    while (!frontier.empty()) {
        if (level >= caps.max_control_length) {
            // Unexplored expansions remain (conservatively assume so).
            bool expandable = false;
            for (const auto& [state, w] : frontier) {
                (void)w;
                for (int t = 0; t < num_tables && !expandable; ++t)
                    if (dfa_.next(state, t) >= 0) expandable = true;
            }
            if (expandable) cap_hit = true;
            break;
        }
        ++level;

        std::vector<std::pair<int, Word>> work;
        work.swap(frontier);
        std::vector<std::pair<int, Word>> children;
        bool level_cap_hit = false;

        const std::size_t nwork = work.size();
#ifdef _OPENMP
        const bool parallel = policy == ExecPolicy::Parallel && nwork > 16;
#else
        const bool parallel = false;
        (void)policy;
#endif

#ifdef _OPENMP
#pragma omp parallel if (parallel) reduction(|| : level_cap_hit)
#endif
        {
            std::vector<std::pair<int, Word>> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8) nowait
#endif
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nwork); ++i) {
                const auto& [state, w] = work[static_cast<std::size_t>(i)];
                for (int t = 0; t < num_tables; ++t) {
                    const int state2 = dfa_.next(state, t);
                    if (state2 < 0) continue;
                    std::size_t budget = caps.max_visited + 1;
                    bool hit = false;
                    expand_children(*this, w, tables_[t], max_word_length,
                                    caps.max_sentential_length, &hit, [&](const Word& child) {
                                        local.emplace_back(state2, child);
                                        return --budget > 0;
                                    });
                    level_cap_hit = level_cap_hit || hit;
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            children.insert(children.end(), std::make_move_iterator(local.begin()),
                            std::make_move_iterator(local.end()));
        }

        cap_hit = cap_hit || level_cap_hit;
        // Canonical merge order keeps results independent of thread timing.
        std::sort(children.begin(), children.end());
        children.erase(std::unique(children.begin(), children.end()), children.end());
        bool stop = false;
        for (auto& [state, w] : children) {
            if (visited.size() >= caps.max_visited) {
                cap_hit = true;
                stop = true;
                break;
            }
            consider(state, w);
        }
        if (stop) break;
    }

    res.visited_pairs = visited.size();
    res.levels = level;
    res.exhaustive = !cap_hit;
    return res;
}

MemberResult LSystem::member(const Word& target, const SearchCaps& caps) const {
    caps.validate();
    if (!alphabet_.valid_word(target) || !is_terminal_word(target))
        throw AlphabetError("membership queries require a word over the terminal alphabet");

    MemberResult res;
    if (dfa_.empty_language()) {
        res.verdict = Verdict::No;
        return res;
    }

    const std::size_t target_ne = nonerasable_count(target);
    struct Parent {
        std::string key;
        int table;
    };
    std::unordered_map<std::string, Parent> parents;
    std::unordered_set<std::string> visited;
    std::vector<std::pair<int, Word>> frontier;
    bool cap_hit = false;
    std::optional<std::string> found_key;

    auto reconstruct = [&](const std::string& goal_key) {
        std::vector<std::pair<int, Word>> chain; // (table idx, resulting form)
        std::string key = goal_key;
        while (true) {
            auto it = parents.find(key);
            if (it == parents.end()) break;
            chain.emplace_back(it->second.table, Word(key.substr(1)));
            key = it->second.key;
        }
        std::reverse(chain.begin(), chain.end());
        DerivationWitness w;
        w.axiom = render(Word(key.substr(1)));
        for (auto& [t, form] : chain) w.steps.emplace_back(tables_[t].name, render(form));
        w.final_word = render(target);
        return w;
    };

    auto consider = [&](int state, const Word& w, const std::string* parent, int table) {
        std::string key = pair_key(state, w);
        if (!visited.insert(key).second) return;
        if (parent) parents.emplace(key, Parent{*parent, table});
        if (dfa_.accepting(state) && w == target && !found_key) found_key = key;
        frontier.emplace_back(state, w);
    };

    for (const auto& ax : axioms_) {
        if (nonerasable_count(ax) > target_ne) continue;
        if (ax.size() > caps.max_sentential_length) {
            cap_hit = true;
            continue;
        }
        consider(dfa_.start(), ax, nullptr, -1);
    }

    const int num_tables = static_cast<int>(tables_.size());
    std::size_t level = 0;
    while (!frontier.empty() && !found_key) {
        if (level >= caps.max_control_length) {
            cap_hit = true;
            break;
        }
        ++level;
        std::vector<std::pair<int, Word>> work;
        work.swap(frontier);
        for (const auto& [state, w] : work) {
            if (found_key) break;
            const std::string key = pair_key(state, w);
            for (int t = 0; t < num_tables && !found_key; ++t) {
                const int state2 = dfa_.next(state, t);
                if (state2 < 0) continue;
                bool hit = false;
                expand_children(*this, w, tables_[t], target_ne, caps.max_sentential_length, &hit,
                                [&](const Word& child) {
                                    if (visited.size() >= caps.max_visited) return false;
                                    consider(state2, child, &key, t);
                                    return !found_key;
                                });
                if (hit && !found_key) cap_hit = true;
            }
        }
        if (visited.size() >= caps.max_visited) {
            cap_hit = true;
            break;
        }
    }

    if (found_key) {
        res.verdict = Verdict::Yes;
        res.witness = reconstruct(*found_key);
        return res;
    }
    res.verdict = cap_hit ? Verdict::Unknown : Verdict::No;
    return res;
}

MemberResult LSystem::member_text(std::string_view word_text, const SearchCaps& caps) const {
    return member(parse_word(word_text), caps);
}

namespace {

bool step_matches(const Word& u, const Table& t, const Word& v) {
    const std::size_t m = u.size(), n = v.size();
    std::vector<std::vector<bool>> reach(m + 1, std::vector<bool>(n + 1, false));
    reach[0][0] = true;
    for (std::size_t i = 0; i < m; ++i) {
        const auto c = static_cast<SymbolId>(static_cast<unsigned char>(u[i]));
        const Word identity(1, static_cast<char>(c));
        const auto& alts = t.has_rule(c) ? t.alternatives[c] : std::vector<Word>{};
        for (std::size_t j = 0; j <= n; ++j) {
            if (!reach[i][j]) continue;
            auto apply = [&](const Word& alt) {
                if (j + alt.size() <= n && v.compare(j, alt.size(), alt) == 0)
                    reach[i + 1][j + alt.size()] = true;
            };
            if (t.has_rule(c))
                for (const auto& alt : alts) apply(alt);
            else
                apply(identity);
        }
    }
    return reach[m][n];
}

} // namespace

VerifyResult LSystem::verify(const DerivationWitness& witness) const {
    auto fail = [&](std::string reason) { return VerifyResult{false, std::move(reason)}; };
    Word current;
    try {
        current = parse_word(witness.axiom);
    } catch (const AlphabetError& e) {
        return fail(std::string("axiom does not parse: ") + e.what());
    }
    if (std::find(axioms_.begin(), axioms_.end(), current) == axioms_.end())
        return fail("axiom is not an axiom of the system");

    std::vector<int> labels;
    for (std::size_t i = 0; i < witness.steps.size(); ++i) {
        const auto& [name, form_text] = witness.steps[i];
        const int idx = table_index(name);
        if (idx < 0) return fail("step " + std::to_string(i + 1) + " uses unknown table " + name);
        Word form;
        try {
            form = parse_word(form_text);
        } catch (const AlphabetError& e) {
            return fail("step " + std::to_string(i + 1) + " form does not parse: " + e.what());
        }
        if (!step_matches(current, tables_[idx], form))
            return fail("step " + std::to_string(i + 1) + " is not a legal application of " + name);
        current = std::move(form);
        labels.push_back(idx);
    }

    if (!dfa_.accepts(labels)) return fail("table sequence rejected by the control language");
    if (render(current) != witness.final_word)
        return fail("final word does not match the last sentential form");
    if (!is_terminal_word(current)) return fail("final word contains non-terminal symbols");
    return VerifyResult{true, {}};
}

bool LSystem::operator==(const LSystem& o) const {
    return alphabet_ == o.alphabet_ && terminal_ == o.terminal_ && axioms_ == o.axioms_ &&
           tables_ == o.tables_ && control_ == o.control_;
}

// ---------------------------------------------------------------------------
// Combinators.

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
    std::string name = std::move(base);
    while (taken.count(name)) name += "'";
    return name;
}

struct SideCopy {
    std::map<std::string, std::string> symbol; // original token -> copy token
    std::map<std::string, std::string> table;  // original name -> renamed
};

// Collects everything the two component systems contribute to a combined
// system: fresh copies of all side symbols, renamed tables, per-side decode
// tables, and renamed control expressions.
struct Combination {
    LSystemBuilder builder;
    std::set<std::string> tokens_taken;
    std::set<std::string> names_taken;
    std::vector<std::string> alphabet_tokens;
    std::vector<std::string> terminal_tokens;
    std::string start;
    SideCopy sides[2];
    ControlRegex side_control[2];
    std::string decode_table[2];
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
        pending_tables; // (name, rules as token-text pairs)

    Combination(const LSystem& a, const LSystem& b) {
        const LSystem* sys[2] = {&a, &b};
        // Merged terminal alphabet, by token equality.
        for (int s = 0; s < 2; ++s)
            for (const auto& tok : sys[s]->terminal_tokens())
                if (!tokens_taken.count(tok)) {
                    tokens_taken.insert(tok);
                    terminal_tokens.push_back(tok);
                    alphabet_tokens.push_back(tok);
                }
        start = fresh_token("S");
        alphabet_tokens.push_back(start);
        for (int s = 0; s < 2; ++s) {
            const std::string suffix = "." + std::to_string(s + 1);
            for (const auto& tok : sys[s]->alphabet().tokens()) {
                std::string copy = fresh_token(tok + suffix);
                sides[s].symbol[tok] = copy;
                alphabet_tokens.push_back(copy);
            }
        }
        for (int s = 0; s < 2; ++s) {
            const std::string suffix = "." + std::to_string(s + 1);
            for (const auto& t : sys[s]->tables()) {
                std::string renamed = fresh_table(t.name + suffix);
                sides[s].table[t.name] = renamed;
                std::vector<std::pair<std::string, std::string>> rules;
                for (std::size_t c = 0; c < sys[s]->alphabet().size(); ++c) {
                    const auto id = static_cast<SymbolId>(c);
                    if (!t.has_rule(id)) continue;
                    const std::string& lhs = sys[s]->alphabet().token(id);
                    for (const auto& alt : t.alternatives[c])
                        rules.emplace_back(sides[s].symbol.at(lhs), copy_word(*sys[s], s, alt));
                }
                pending_tables.emplace_back(std::move(renamed), std::move(rules));
            }
            side_control[s] = rename_control_symbols(sys[s]->control(), sides[s].table);
            // Decode table: copy of a terminal -> the merged terminal.
            decode_table[s] = fresh_table("emit" + std::to_string(s + 1));
            std::vector<std::pair<std::string, std::string>> rules;
            for (const auto& tok : sys[s]->terminal_tokens())
                rules.emplace_back(sides[s].symbol.at(tok), tok);
            pending_tables.emplace_back(decode_table[s], std::move(rules));
        }
    }

    std::string fresh_token(std::string base) {
        std::string tok = fresh_name(std::move(base), tokens_taken);
        tokens_taken.insert(tok);
        return tok;
    }

    std::string fresh_table(std::string base) {
        std::string n = fresh_name(std::move(base), names_taken);
        names_taken.insert(n);
        return n;
    }

    std::string copy_word(const LSystem& sys, int side, const Word& w) {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += sides[side].symbol.at(sys.alphabet().token(
                static_cast<SymbolId>(static_cast<unsigned char>(w[i]))));
        }
        return out;
    }

    LSystem finish(std::vector<std::pair<std::string, std::string>> seed_tables,
                   ControlRegex control) {
        builder.alphabet(alphabet_tokens).terminals(terminal_tokens).axiom(start);
        for (auto& [name, rhs] : seed_tables) {
            builder.table(name);
            builder.rule(start, rhs);
        }
        for (auto& [name, rules] : pending_tables) {
            builder.table(name);
            for (auto& [lhs, rhs] : rules) builder.rule(lhs, rhs);
        }
        builder.control(std::move(control));
        return builder.build();
    }
};

} // namespace

LSystem union_systems(const LSystem& a, const LSystem& b) {
    const LSystem* sys[2] = {&a, &b};
    Combination comb(a, b);
    std::vector<std::pair<std::string, std::string>> seeds;
    std::vector<ControlRegex> arms;
    for (int s = 0; s < 2; ++s) {
        for (std::size_t j = 0; j < sys[s]->axioms().size(); ++j) {
            std::string seed = comb.fresh_table("seed" + std::to_string(s + 1) +
                                                (j ? "_" + std::to_string(j + 1) : ""));
            seeds.emplace_back(seed, comb.copy_word(*sys[s], s, sys[s]->axioms()[j]));
            arms.push_back(ControlRegex::concat({ControlRegex::sym(seed), comb.side_control[s],
                                                 ControlRegex::sym(comb.decode_table[s])}));
        }
    }
    return comb.finish(std::move(seeds), ControlRegex::alt(std::move(arms)));
}

LSystem concat_systems(const LSystem& a, const LSystem& b) {
    Combination comb(a, b);
    std::vector<std::pair<std::string, std::string>> seeds;
    std::vector<ControlRegex> arms;
    for (std::size_t ja = 0; ja < a.axioms().size(); ++ja) {
        for (std::size_t jb = 0; jb < b.axioms().size(); ++jb) {
            std::string suffix;
            if (a.axioms().size() > 1 || b.axioms().size() > 1)
                suffix = "_" + std::to_string(ja + 1) + "_" + std::to_string(jb + 1);
            std::string seed = comb.fresh_table("seed" + suffix);
            std::string left = comb.copy_word(a, 0, a.axioms()[ja]);
            std::string right = comb.copy_word(b, 1, b.axioms()[jb]);
            std::string rhs = left.empty() ? right : (right.empty() ? left : left + " " + right);
            seeds.emplace_back(seed, rhs);
            arms.push_back(ControlRegex::concat(
                {ControlRegex::sym(seed), comb.side_control[0],
                 ControlRegex::sym(comb.decode_table[0]), comb.side_control[1],
                 ControlRegex::sym(comb.decode_table[1])}));
        }
    }
    return comb.finish(std::move(seeds), ControlRegex::alt(std::move(arms)));
}

LSystem literal_system(const std::vector<std::string>& alphabet_tokens,
                       std::string_view word_text) {
    LSystemBuilder b;
    b.alphabet(alphabet_tokens).terminals(alphabet_tokens).axiom(word_text);
    b.control(ControlRegex::epsilon());
    return b.build();
}

} // namespace grouplang
