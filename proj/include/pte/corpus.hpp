#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pte/bounds.hpp"
#include "pte/solution.hpp"

namespace pte {

struct CorpusEntry {
    std::string id;
    PteSolution solution;
    std::optional<GFactorization> claimed_constant;  // unit-free
    std::string source;
};

struct TableRowZi {
    int n = 0;
    GFactorization lower;
    std::optional<GFactorization> upper;
    std::string upper_src;  // zi | z | none
};

struct TableRowZ {
    int n = 0;
    std::string lower, upper;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::vector<TableRowZi> table_zi;
    std::vector<TableRowZ> table_z;
    std::vector<std::string> known_bad_files;
};

// Loads and re-verifies the bundled corpus: every entry must reach its
// claimed degree and every claimed constant must match the computed constant
// up to a unit. Throws std::runtime_error naming the offending entry.
Corpus load_corpus(const std::string& data_dir);

// Comparison of one reference-table lower bound against the rules engine.
struct TableComparison {
    int n = 0;
    bool equal = false;
    GFactorization engine_extra;  // factors the engine derives beyond the table
    GFactorization table_extra;   // table factors the rules do not derive
};
TableComparison compare_table_row(const TableRowZi& row);

}  // namespace pte
