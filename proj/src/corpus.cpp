#include "pte/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pte/textio.hpp"

namespace pte {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::pair<std::string, std::string>> split_segments(const std::string& line) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(line);
    std::string seg;
    while (std::getline(ss, seg, ';')) {
        seg = trim(seg);
        if (seg.empty()) continue;
        size_t eq = seg.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("corpus: expected key=value, got '" + seg + "'");
        out.emplace_back(trim(seg.substr(0, eq)), trim(seg.substr(eq + 1)));
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("corpus: cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CorpusEntry parse_entry(const std::string& line) {
    std::string id, src, claimed;
    std::string rest;
    for (const auto& [key, value] : split_segments(line)) {
        if (key == "id") {
            id = value;
        } else if (key == "src") {
            src = value;
        } else if (key == "C") {
            claimed = value;
        } else {
            rest += key + "=" + value + "; ";
        }
    }
    if (id.empty()) throw std::runtime_error("corpus: entry without id: '" + line + "'");
    PteSolution s = parse_solution_line(rest);
    std::optional<GFactorization> cf;
    if (!claimed.empty()) {
        GFactorization f = parse_factored(claimed);
        f.unit = GaussianInt(1, 0);
        cf = std::move(f);
    }
    return CorpusEntry{id, std::move(s), std::move(cf), src};
}

void verify_entry(const CorpusEntry& e) {
    int degree = verify_degree(e.solution);
    if (degree < e.solution.claimed_degree())
        throw std::runtime_error("corpus: entry " + e.id + " reaches degree " +
                                 std::to_string(degree) + " < claimed " +
                                 std::to_string(e.solution.claimed_degree()));
    if (e.claimed_constant) {
        if (degree != e.solution.size() - 1)
            throw std::runtime_error("corpus: entry " + e.id +
                                     " has a claimed constant but is not ideal");
        GFactorization computed = factor(constant(e.solution));
        computed.unit = GaussianInt(1, 0);
        if (computed.factors != e.claimed_constant->factors)
            throw std::runtime_error("corpus: entry " + e.id + " claimed constant " +
                                     e.claimed_constant->to_string() +
                                     " does not match computed " + computed.to_string());
    }
}

}  // namespace

Corpus load_corpus(const std::string& data_dir) {
    Corpus corpus;
    const fs::path base(data_dir);

    std::stringstream solutions(read_file(base / "corpus" / "solutions.txt"));
    std::string line;
    size_t lineno = 0;
    while (std::getline(solutions, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            CorpusEntry e = parse_entry(t);
            verify_entry(e);
            corpus.entries.push_back(std::move(e));
        } catch (const std::exception& ex) {
            throw std::runtime_error("corpus: solutions.txt line " + std::to_string(lineno) +
                                     ": " + ex.what());
        }
    }

    std::stringstream zi(read_file(base / "tables" / "table_zi.txt"));
    while (std::getline(zi, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        TableRowZi row;
        for (const auto& [key, value] : split_segments(t)) {
            if (key == "n")
                row.n = std::stoi(value);
            else if (key == "lower")
                row.lower = parse_factored(value);
            else if (key == "upper")
                row.upper = value == "none" ? std::nullopt
                                            : std::optional<GFactorization>(parse_factored(value));
            else if (key == "upper_src")
                row.upper_src = value;
        }
        if (row.n < 2) throw std::runtime_error("corpus: bad table_zi row '" + t + "'");
        corpus.table_zi.push_back(std::move(row));
    }

    std::stringstream z(read_file(base / "tables" / "table_z.txt"));
    while (std::getline(z, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        TableRowZ row;
        for (const auto& [key, value] : split_segments(t)) {
            if (key == "n")
                row.n = std::stoi(value);
            else if (key == "lower")
                row.lower = value;
            else if (key == "upper")
                row.upper = value;
        }
        if (row.n < 2) throw std::runtime_error("corpus: bad table_z row '" + t + "'");
        corpus.table_z.push_back(row);
    }

    fs::path bad = base / "corpus" / "known-bad";
    if (fs::exists(bad))
        for (const auto& f : fs::directory_iterator(bad))
            corpus.known_bad_files.push_back(f.path().filename().string());
    std::sort(corpus.known_bad_files.begin(), corpus.known_bad_files.end());

    return corpus;
}

TableComparison compare_table_row(const TableRowZi& row) {
    TableComparison cmp;
    cmp.n = row.n;
    GFactorization engine = lower_bound(row.n).lower;
    for (const auto& [p, e] : engine.factors) {
        int d = e - row.lower.exponent_of(p);
        if (d > 0) gfact_mul_prime(cmp.engine_extra, p, d);
    }
    for (const auto& [p, e] : row.lower.factors) {
        int d = e - engine.exponent_of(p);
        if (d > 0) gfact_mul_prime(cmp.table_extra, p, d);
    }
    cmp.equal = cmp.engine_extra.factors.empty() && cmp.table_extra.factors.empty();
    return cmp;
}

}  // namespace pte
