// Command-line front end: enumeration, membership, the Grigorchuk word
// problem and witnesses, free-group primitivity, growth series, and crossing
// sequences.
//
// Exit codes: 0 = success/YES, 1 = NO, 2 = UNKNOWN or capped search,
// 64 = usage/validation error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouplang/batch.hpp"
#include "grouplang/catalog.hpp"
#include "grouplang/grammar_io.hpp"
#include "grouplang/grigorchuk.hpp"
#include "grouplang/growth.hpp"
#include "grouplang/lsystem.hpp"
#include "grouplang/stallings.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct SystemChoice {
    std::string file;
    std::string builtin;
};

struct CapFlags {
    std::size_t max_sentential = 256;
    std::size_t max_control = 64;
    std::size_t max_visited = 1'000'000;

    grouplang::SearchCaps caps() const { return {max_sentential, max_control, max_visited}; }
};

void add_system_options(CLI::App* cmd, SystemChoice& choice) {
    auto* file = cmd->add_option("grammar", choice.file, "grammar file to load");
    auto* builtin =
        cmd->add_option("--builtin", choice.builtin, "builtin grammar (intermediate-growth, "
                                                     "kappa, grigorchuk-coword, z2-semidirect)");
    file->excludes(builtin);
}

void add_cap_options(CLI::App* cmd, CapFlags& caps) {
    cmd->add_option("--max-sentential", caps.max_sentential,
                    "cap on sentential form length")
        ->envname("GROUPLANG_MAX_SENTENTIAL");
    cmd->add_option("--max-control", caps.max_control, "cap on control word length")
        ->envname("GROUPLANG_MAX_CONTROL");
    cmd->add_option("--max-visited", caps.max_visited, "cap on visited search states")
        ->envname("GROUPLANG_MAX_VISITED");
}

grouplang::LSystem load_system(const SystemChoice& choice) {
    if (!choice.builtin.empty()) {
        auto sys = grouplang::catalog::builtin(choice.builtin);
        if (!sys) throw std::invalid_argument("unknown builtin grammar: " + choice.builtin);
        return std::move(*sys);
    }
    if (choice.file.empty()) throw std::invalid_argument("need a grammar file or --builtin");
    return grouplang::parse_grammar_file(choice.file);
}

std::size_t word_length(const std::string& rendered) {
    if (rendered.find(' ') == std::string::npos) return rendered.size();
    std::istringstream in(rendered);
    std::string tok;
    std::size_t n = 0;
    while (in >> tok) ++n;
    return n;
}

void print_words_sorted(const std::set<std::string>& words) {
    std::vector<std::string> sorted(words.begin(), words.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const auto la = word_length(a), lb = word_length(b);
        return la != lb ? la < lb : a < b;
    });
    for (const auto& w : sorted) std::cout << (w.empty() ? "~" : w) << '\n';
}

int run_enumerate(const SystemChoice& choice, const CapFlags& caps, std::size_t max_len,
                  bool parallel, bool dump_grammar) {
    const auto sys = load_system(choice);
    if (dump_grammar) {
        std::cout << grouplang::print_grammar(sys);
        return kExitYes;
    }
    const auto res = sys.enumerate(max_len, caps.caps(),
                                   parallel ? grouplang::ExecPolicy::Parallel
                                            : grouplang::ExecPolicy::Serial);
    print_words_sorted(res.words);
    if (!res.exhaustive) {
        std::cerr << "note: search caps were hit; the list may be incomplete\n";
        return kExitUnknown;
    }
    return kExitYes;
}

int run_member(const SystemChoice& choice, const CapFlags& caps, const std::string& word,
               bool grig_oracle) {
    const auto sys = load_system(choice);
    if (grig_oracle) {
        if (choice.builtin != "grigorchuk-coword")
            throw std::invalid_argument("--grig-oracle requires --builtin grigorchuk-coword");
        if (grouplang::grig::is_trivial(word)) {
            std::cout << "NO\n";
            return kExitNo;
        }
        auto witness = grouplang::grig::derive_witness(word);
        std::cout << "YES\n" << witness.to_text();
        return kExitYes;
    }
    const auto res = sys.member_text(word, caps.caps());
    switch (res.verdict) {
    case grouplang::Verdict::Yes:
        std::cout << "YES\n" << res.witness->to_text();
        return kExitYes;
    case grouplang::Verdict::No:
        std::cout << "NO\n";
        return kExitNo;
    case grouplang::Verdict::Unknown:
        std::cout << "UNKNOWN (search capped)\n";
        return kExitUnknown;
    }
    return kExitUsage;
}

int run_grig_wp(const std::string& word) {
    if (grouplang::grig::is_trivial(word)) {
        std::cout << "TRIVIAL\n";
        return kExitYes;
    }
    std::cout << "NONTRIVIAL\n";
    return kExitNo;
}

int run_grig_witness(const std::string& word) {
    try {
        auto witness = grouplang::grig::derive_witness(word);
        std::cout << witness.to_text();
        return kExitYes;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_free_primitive(const std::string& words_text, int k, bool trace) {
    std::vector<std::string> chunks{""};
    for (char c : words_text) {
        if (c == '#')
            chunks.emplace_back();
        else
            chunks.back() += c;
    }
    std::vector<grouplang::stallings::FreeWord> words;
    for (const auto& chunk : chunks) {
        auto w = grouplang::stallings::FreeWord::parse(chunk);
        if (!w.reduced()) {
            std::cerr << "warning: input word " << w.str() << " is not freely reduced; reducing\n";
            w = w.freely_reduced();
        }
        if (w.empty()) throw std::invalid_argument("empty word in the input set");
        words.push_back(std::move(w));
    }
    if (words.empty()) throw std::invalid_argument("no input words");
    if (static_cast<int>(words.size()) > k) {
        std::cout << "NO (more words than the rank of the ambient free group)\n";
        return kExitNo;
    }
    grouplang::stallings::PrimitiveSearchOptions opt;
    std::vector<std::string> steps;
    if (trace) opt.trace = &steps;
    const bool yes = grouplang::stallings::is_primitive_set(words, k, opt);
    std::cout << (yes ? "YES" : "NO") << '\n';
    if (yes && trace)
        for (const auto& s : steps) std::cout << "  " << s << '\n';
    return yes ? kExitYes : kExitNo;
}

int run_free_basis2(const std::string& g_text, const std::string& h_text) {
    const auto g = grouplang::stallings::FreeWord::parse(g_text);
    const auto h = grouplang::stallings::FreeWord::parse(h_text);
    const bool yes = grouplang::stallings::is_basis_f2(g, h);
    std::cout << (yes ? "YES" : "NO") << '\n';
    return yes ? kExitYes : kExitNo;
}

int run_growth(const SystemChoice& choice, const CapFlags& caps, std::size_t max_len,
               bool parallel) {
    const auto sys = load_system(choice);
    try {
        const auto series = grouplang::growth::growth_of_system(
            sys, max_len, caps.caps(),
            parallel ? grouplang::ExecPolicy::Parallel : grouplang::ExecPolicy::Serial);
        std::cout << grouplang::growth::to_csv(series);
        return kExitYes;
    } catch (const grouplang::growth::NonExhaustiveEnumeration& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnknown;
    }
}

int run_kappa(long m, long n) {
    std::cout << grouplang::catalog::kappa(m, n) << '\n';
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"L-system toolkit for languages arising in group theory"};
    app.require_subcommand(1);

    SystemChoice choice;
    CapFlags caps;
    std::size_t max_len = 8;
    bool parallel = false;
    bool dump_grammar = false;
    std::string word;
    std::string words_text, g_text, h_text;
    int rank = 2;
    bool trace = false;
    bool grig_oracle = false;
    long kappa_m = 1, kappa_n = 0;

    auto* enumerate = app.add_subcommand("enumerate", "list the generated language up to a length");
    add_system_options(enumerate, choice);
    add_cap_options(enumerate, caps);
    enumerate->add_option("--max-len", max_len, "maximum word length")->default_val(8);
    enumerate->add_flag("--parallel", parallel, "expand search levels with OpenMP");
    enumerate->add_flag("--dump-grammar", dump_grammar, "print the grammar file and exit");

    auto* member = app.add_subcommand("member", "decide membership of a terminal word");
    std::vector<std::string> member_args;
    member->add_option("--builtin", choice.builtin,
                       "builtin grammar (intermediate-growth, kappa, grigorchuk-coword, "
                       "z2-semidirect)");
    member->add_option("args", member_args, "grammar file (unless --builtin) and the word")
        ->expected(1, 2);
    add_cap_options(member, caps);
    member->add_flag("--grig-oracle", grig_oracle,
                     "answer via the group-theoretic word problem (grigorchuk-coword only)");

    auto* grig = app.add_subcommand("grig", "Grigorchuk group word problem");
    grig->require_subcommand(1);
    auto* wp = grig->add_subcommand("wp", "decide whether a word represents the identity");
    wp->add_option("word", word, "word over a,b,c,d")->required();
    auto* witness = grig->add_subcommand("witness", "derive a grammar witness for a nontrivial word");
    witness->add_option("word", word, "word over a,b,c,d")->required();

    auto* free_cmd = app.add_subcommand("free", "free-group primitivity");
    free_cmd->require_subcommand(1);
    auto* primitive = free_cmd->add_subcommand("primitive", "recognize a primitive set");
    primitive->add_option("-k,--rank", rank, "rank of the ambient free group")->required();
    primitive->add_option("words", words_text, "words separated by '#' (inverses uppercase)")
        ->required();
    primitive->add_flag("--trace", trace, "print the witnessing pinch/fold sequence");
    auto* basis2 = free_cmd->add_subcommand("basis2", "decide whether a pair is a basis of F2");
    basis2->add_option("first", g_text, "first word")->required();
    basis2->add_option("second", h_text, "second word")->required();

    auto* growth_cmd = app.add_subcommand("growth", "per-length word counts as CSV");
    add_system_options(growth_cmd, choice);
    add_cap_options(growth_cmd, caps);
    growth_cmd->add_option("--max-len", max_len, "maximum word length")->default_val(8);
    growth_cmd->add_flag("--parallel", parallel, "expand search levels with OpenMP");

    auto* kappa_cmd = app.add_subcommand("kappa", "print a crossing sequence");
    kappa_cmd->add_option("m", kappa_m, "horizontal reach (m > 0)")->required();
    kappa_cmd->add_option("n", kappa_n, "vertical reach (n >= 0)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(choice, caps, max_len, parallel, dump_grammar);
        if (member->parsed()) {
            if (choice.builtin.empty()) {
                if (member_args.size() != 2)
                    throw std::invalid_argument("member needs a grammar file and a word");
                choice.file = member_args[0];
                word = member_args[1];
            } else {
                if (member_args.size() != 1)
                    throw std::invalid_argument("member with --builtin takes exactly one word");
                word = member_args[0];
            }
            return run_member(choice, caps, word, grig_oracle);
        }
        if (wp->parsed()) return run_grig_wp(word);
        if (witness->parsed()) return run_grig_witness(word);
        if (primitive->parsed()) return run_free_primitive(words_text, rank, trace);
        if (basis2->parsed()) return run_free_basis2(g_text, h_text);
        if (growth_cmd->parsed()) return run_growth(choice, caps, max_len, parallel);
        if (kappa_cmd->parsed()) return run_kappa(kappa_m, kappa_n);
    } catch (const grouplang::GrammarParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
