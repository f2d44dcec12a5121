#include "grouplang/grammar_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace grouplang {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

LSystem parse_grammar(std::string_view text) {
    LSystemBuilder builder;
    bool saw_alphabet = false, saw_terminals = false, saw_control = false;
    bool in_table = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (trim(line).empty()) continue;
        const bool indented = std::isspace(static_cast<unsigned char>(line.front()));

        if (indented) {
            if (!in_table)
                throw GrammarParseError("indented rule line outside of a table block", lineno, 1);
            const auto arrow = line.find("->");
            if (arrow == std::string_view::npos)
                throw GrammarParseError("rule line is missing \"->\"", lineno, line.size());
            auto lhs_tokens = split_tokens(line.substr(0, arrow));
            if (lhs_tokens.size() != 1)
                throw GrammarParseError("rule needs exactly one left-hand symbol", lineno, 1);
            auto rhs_tokens = split_tokens(line.substr(arrow + 2));
            std::string rhs;
            if (rhs_tokens.size() == 1 && rhs_tokens[0] == "~") {
                rhs = "";
            } else {
                for (const auto& t : rhs_tokens) {
                    if (t == "~")
                        throw GrammarParseError("'~' must stand alone as the whole replacement",
                                                lineno, arrow + 3);
                    if (!rhs.empty()) rhs += ' ';
                    rhs += t;
                }
            }
            try {
                builder.rule(lhs_tokens[0], rhs);
            } catch (const std::invalid_argument& e) {
                throw GrammarParseError(e.what(), lineno, 1);
            }
            continue;
        }

        in_table = false;
        if (starts_with(line, "alphabet:")) {
            if (saw_alphabet) throw GrammarParseError("duplicate alphabet line", lineno, 1);
            saw_alphabet = true;
            try {
                builder.alphabet(split_tokens(line.substr(9)));
            } catch (const std::invalid_argument& e) {
                throw GrammarParseError(e.what(), lineno, 10);
            }
        } else if (starts_with(line, "terminals:")) {
            if (saw_terminals) throw GrammarParseError("duplicate terminals line", lineno, 1);
            saw_terminals = true;
            builder.terminals(split_tokens(line.substr(10)));
        } else if (starts_with(line, "axiom:")) {
            auto toks = split_tokens(line.substr(6));
            std::string word;
            for (const auto& t : toks) {
                if (!word.empty()) word += ' ';
                word += t;
            }
            builder.axiom(word);
        } else if (starts_with(line, "table ")) {
            auto rest = trim(line.substr(6));
            if (rest.empty() || rest.back() != ':')
                throw GrammarParseError("table line must end with ':'", lineno, line.size());
            auto name = trim(rest.substr(0, rest.size() - 1));
            if (name.empty()) throw GrammarParseError("table needs a name", lineno, 7);
            builder.table(std::string(name));
            in_table = true;
        } else if (starts_with(line, "control:")) {
            if (saw_control) throw GrammarParseError("duplicate control line", lineno, 1);
            saw_control = true;
            try {
                builder.control(line.substr(8));
            } catch (const ControlSyntaxError& e) {
                throw GrammarParseError(e.what(), lineno, 9 + e.position);
            }
        } else {
            throw GrammarParseError("unrecognized directive", lineno, 1);
        }
    }

    if (!saw_alphabet) throw GrammarParseError("missing alphabet line", lineno + 1, 1);
    if (!saw_terminals) throw GrammarParseError("missing terminals line", lineno + 1, 1);
    if (!saw_control) throw GrammarParseError("missing control line", lineno + 1, 1);
    try {
        return builder.build();
    } catch (const std::invalid_argument& e) {
        throw GrammarParseError(e.what(), lineno + 1, 1);
    }
}

LSystem parse_grammar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grammar file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grammar(buf.str());
}

std::string print_grammar(const LSystem& sys) {
    std::ostringstream out;
    const auto& alpha = sys.alphabet();

    out << "alphabet:";
    for (const auto& tok : alpha.tokens()) out << ' ' << tok;
    out << "\nterminals:";
    for (const auto& tok : sys.terminal_tokens()) out << ' ' << tok;
    out << '\n';
    for (const auto& ax : sys.axioms()) {
        out << "axiom:";
        for (char c : ax) out << ' ' << alpha.token(static_cast<SymbolId>(static_cast<unsigned char>(c)));
        out << '\n';
    }
    for (const auto& t : sys.tables()) {
        out << "table " << t.name << ":\n";
        for (std::size_t c = 0; c < alpha.size(); ++c) {
            const auto id = static_cast<SymbolId>(c);
            if (!t.has_rule(id)) continue;
            for (const auto& alt : t.alternatives[c]) {
                out << "  " << alpha.token(id) << " ->";
                if (alt.empty()) {
                    out << " ~";
                } else {
                    for (char x : alt)
                        out << ' '
                            << alpha.token(static_cast<SymbolId>(static_cast<unsigned char>(x)));
                }
                out << '\n';
            }
        }
    }
    out << "control: " << to_string(sys.control()) << '\n';
    return out.str();
}

} // namespace grouplang
