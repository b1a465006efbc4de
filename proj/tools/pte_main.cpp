// Command-line front end: verification, constants, factorization, divisibility
// bounds, equivalence, corpus checks, and the interpolation search.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pte/corpus.hpp"
#include "pte/search.hpp"
#include "pte/textio.hpp"

using namespace pte;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_constant(const GaussianInt& c) {
    GFactorization f = factor(c);
    std::string out = c.to_string() + " = ";
    if (!(f.unit == GaussianInt(1, 0))) out += f.unit.to_string() + "*";
    out += f.to_string();
    return out;
}

int cmd_verify(const std::string& file) {
    auto sols = parse_solutions(read_file_or_throw(file));
    bool all_ok = true;
    for (size_t i = 0; i < sols.size(); ++i) {
        int d = verify_degree(sols[i]);
        bool ok = d >= sols[i].claimed_degree();
        bool ideal = d == sols[i].size() - 1;
        all_ok = all_ok && ok;
        std::cout << "line " << (i + 1) << ": n=" << sols[i].size() << " degree=" << d
                  << " ideal=" << (ideal ? "yes" : "no") << " claimed=" << sols[i].claimed_degree()
                  << (ok ? "" : " INVALID") << "\n";
    }
    return all_ok ? kExitOk : kExitVerification;
}

int cmd_constant(const std::string& file) {
    auto sols = parse_solutions(read_file_or_throw(file));
    bool all_ideal = true;
    for (size_t i = 0; i < sols.size(); ++i) {
        if (verify_degree(sols[i]) == sols[i].size() - 1) {
            std::cout << "line " << (i + 1) << ": C=" << format_constant(constant(sols[i]))
                      << "\n";
        } else {
            std::cout << "line " << (i + 1) << ": not ideal\n";
            all_ideal = false;
        }
    }
    return all_ideal ? kExitOk : kExitVerification;
}

int cmd_factor(const std::string& literal) {
    GaussianInt z = parse_gaussian(literal);
    std::cout << format_constant(z) << "\n";
    return kExitOk;
}

int cmd_bounds(int max_size, bool provenance) {
    for (int n = 2; n <= max_size; ++n) {
        BoundEntry e = lower_bound(n);
        std::cout << "n=" << n << " lower=" << e.lower.to_string() << "\n";
        if (provenance)
            for (const auto& p : e.provenance)
                std::cout << "  " << p.prime.to_string() << "^" << p.exponent << " [" << p.rule
                          << "]\n";
    }
    return kExitOk;
}

int cmd_equiv(const std::string& file) {
    auto sols = parse_solutions(read_file_or_throw(file));
    for (const auto& s : sols)
        if (verify_degree(s) != s.size() - 1)
            throw std::invalid_argument("equiv: all solutions must be ideal");
    for (size_t i = 0; i < sols.size(); ++i) {
        for (size_t j = i + 1; j < sols.size(); ++j) {
            if (sols[i].size() != sols[j].size()) {
                std::cout << (i + 1) << " !~ " << (j + 1) << " (sizes differ)\n";
                continue;
            }
            auto w = equivalent(sols[i], sols[j]);
            if (w)
                std::cout << (i + 1) << " ~ " << (j + 1) << " via M=" << w->m.to_string()
                          << " K=" << w->k.to_string() << "\n";
            else
                std::cout << (i + 1) << " !~ " << (j + 1) << "\n";
        }
    }
    return kExitOk;
}

int cmd_gcd_upper(const std::string& file, bool with_conjugates) {
    auto sols = parse_solutions(read_file_or_throw(file));
    if (with_conjugates) {
        size_t base = sols.size();
        for (size_t i = 0; i < base; ++i) sols.push_back(conjugate_solution(sols[i]));
    }
    std::cout << "gcd-upper=" << corpus_gcd_upper_bound(sols).to_string() << "\n";
    return kExitOk;
}

int cmd_corpus_check(const std::string& data_dir) {
    Corpus corpus = load_corpus(data_dir);  // throws on any verification failure
    for (const auto& e : corpus.entries) {
        std::cout << e.id << ": n=" << e.solution.size()
                  << " degree=" << verify_degree(e.solution)
                  << (e.claimed_constant ? " constant=ok" : "") << "\n";
    }
    std::cout << "entries: " << corpus.entries.size() << " verified\n";

    for (const auto& row : corpus.table_zi) {
        TableComparison cmp = compare_table_row(row);
        std::cout << "table n=" << row.n << ": ";
        if (cmp.equal) {
            std::cout << "engine bound equals the table\n";
            continue;
        }
        if (!cmp.engine_extra.factors.empty())
            std::cout << "engine exceeds table by " << cmp.engine_extra.to_string() << " ";
        if (!cmp.table_extra.factors.empty())
            std::cout << "table factor not rule-derivable: " << cmp.table_extra.to_string();
        std::cout << "\n";
    }
    std::cout << "reference integer table rows: " << corpus.table_z.size() << "\n";
    for (const auto& f : corpus.known_bad_files)
        std::cout << "known-bad: " << f << " (excluded from verification)\n";
    return kExitOk;
}

int cmd_search(const SearchConfig& cfg) {
    RunResult r = run(cfg);
    if (!r.completed) {
        std::cerr << "search interrupted before completion\n";
        return kExitVerification;
    }
    std::cout << "raw solutions: " << r.raw_found << "\n";
    std::cout << "representatives: " << r.representatives << "\n";
    if (r.budget_rejections)
        std::cout << "unresolvable candidates (factor budget): " << r.budget_rejections << "\n";
    for (size_t i = 0; i < r.dedup.size(); ++i) {
        std::cout << "[" << i << "] " << emit_solution(r.dedup[i].solution);
        if (r.dedup[i].conjugate_of)
            std::cout << "  (conjugate pair with [" << *r.dedup[i].conjugate_of << "])";
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Prouhet-Tarry-Escott toolkit over the Gaussian integers"};
    app.require_subcommand(1);

    std::string data_dir = PTE_DEFAULT_DATA_DIR;
    app.add_option("--data", data_dir, "data directory (corpus and tables)");

    std::string file, literal;
    auto* verify = app.add_subcommand("verify", "verify solutions in a file");
    verify->add_option("file", file)->required();

    auto* constant_cmd = app.add_subcommand("constant", "constants of ideal solutions");
    constant_cmd->add_option("file", file)->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor a Gaussian integer literal (a,b)");
    factor_cmd->add_option("value", literal)->required();

    int max_size = 15;
    bool provenance = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "factored lower bounds for C_n");
    bounds_cmd->add_option("--max-size", max_size)->check(CLI::Range(2, 40));
    bounds_cmd->add_flag("--provenance", provenance, "list per-rule contributions");

    auto* equiv_cmd = app.add_subcommand("equiv", "pairwise equivalence with witnesses");
    equiv_cmd->add_option("file", file)->required();

    bool with_conj = false;
    auto* gcd_cmd = app.add_subcommand("gcd-upper", "gcd of the constants in a file");
    gcd_cmd->add_option("file", file)->required();
    gcd_cmd->add_flag("--with-conjugates", with_conj);

    auto* corpus_cmd = app.add_subcommand("corpus", "bundled corpus operations");
    std::string corpus_op;
    corpus_cmd->add_option("op", corpus_op, "check")->required();

    SearchConfig cfg;
    std::string mode_str = "general", sieve_str = "none";
    auto* search_cmd = app.add_subcommand("search", "interpolation search for ideal solutions");
    search_cmd->add_option("--size", cfg.n)->required();
    search_cmd->add_option("--mode", mode_str, "general | sym-even | sym-odd");
    search_cmd->add_option("--box", cfg.box)->required();
    search_cmd->add_option("--k", cfg.k, "interpolation split (general mode)");
    search_cmd->add_option("--sieve", sieve_str, "auto | none | (a,b),(c,d)");
    search_cmd->add_option("--chunks", cfg.chunk_count);
    search_cmd->add_option("--checkpoint", cfg.checkpoint_path);
    search_cmd->add_option("--out", cfg.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(file);
        if (constant_cmd->parsed()) return cmd_constant(file);
        if (factor_cmd->parsed()) return cmd_factor(literal);
        if (bounds_cmd->parsed()) return cmd_bounds(max_size, provenance);
        if (equiv_cmd->parsed()) return cmd_equiv(file);
        if (gcd_cmd->parsed()) return cmd_gcd_upper(file, with_conj);
        if (corpus_cmd->parsed()) {
            if (corpus_op != "check") throw std::invalid_argument("corpus: unknown op");
            return cmd_corpus_check(data_dir);
        }
        if (search_cmd->parsed()) {
            cfg.mode = parse_search_mode(mode_str);
            if (sieve_str == "auto") {
                cfg.sieve = auto_sieve_primes(cfg.n);
            } else if (sieve_str != "none") {
                size_t pos = 0;
                cfg.sieve.push_back(parse_gaussian_prefix(sieve_str, pos));
                if (pos >= sieve_str.size() || sieve_str[pos] != ',')
                    throw std::invalid_argument("sieve: expected two primes");
                ++pos;
                cfg.sieve.push_back(parse_gaussian_prefix(sieve_str, pos));
                if (pos != sieve_str.size())
                    throw std::invalid_argument("sieve: trailing text");
            }
            if (cfg.out_path.empty()) cfg.out_path = "pte_search_out.txt";
            return cmd_search(cfg);
        }
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
