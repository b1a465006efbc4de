#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pte/bounds.hpp"
#include "pte/solution.hpp"

namespace pte {

enum class SearchMode { general, sym_even, sym_odd };

std::string to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view s);

struct SearchConfig {
    int n = 0;
    SearchMode mode = SearchMode::general;
    int k = 0;  // interpolation split for general mode; 0 means ceil((n+1)/2)
    int box = 0;
    std::vector<GaussianInt> sieve;  // empty, or exactly {q1, q2}
    int chunk_count = 1;
    std::string out_path;
    std::string checkpoint_path;
    int workers = 0;  // 0 = hardware default; not part of the fingerprint

    int effective_k() const { return k > 0 ? k : (n + 2) / 2; }
    void validate() const;  // throws std::invalid_argument
    // Deterministic serialization of the search-defining fields.
    std::string canonical_text() const;
    std::string fingerprint() const;
};

// The two largest primes by norm dividing the engine lower bound for size n.
std::vector<GaussianInt> auto_sieve_primes(int n);

// Domain of the first enumerated variable, in canonical order.
std::vector<GaussianInt> first_variable_domain(const SearchConfig& cfg);

// Contiguous, disjoint index ranges covering the first-variable domain.
struct Chunk {
    int id = 0;
    long long lo = 0, hi = 0;  // half-open
};
std::vector<Chunk> plan_chunks(const SearchConfig& cfg);

// Optional record of the interpolation completion internals.
struct CompletionTrace {
    Polynomial f;
    GaussianInt constant;
    std::vector<GaussianInt> x_completed;
    std::vector<GaussianInt> y_completed;
};

// Interpolation completion: given the n-k+1 leading x values and k distinct
// y values (disjoint from the x prefix), reconstructs the unique ideal
// candidate extending them, when one exists over Z[i].
std::vector<PteSolution> complete_general(const std::vector<GaussianInt>& x_prefix,
                                          const std::vector<GaussianInt>& y_prefix,
                                          CompletionTrace* trace = nullptr,
                                          unsigned root_budget_bits = 128);

// Runs one chunk of the configured enumeration, emitting every verified
// solution found (duplicates across labelings included).
struct ChunkStats {
    long long candidates = 0;
    long long budget_rejections = 0;
};
ChunkStats search_chunk(const SearchConfig& cfg, const Chunk& chunk,
                        const std::function<void(const PteSolution&)>& emit);

// Canonical-representative dedup over affine equivalence, annotating
// conjugate-paired classes.
struct DedupEntry {
    PteSolution solution;
    std::optional<size_t> conjugate_of;  // index of the paired representative
};
std::vector<DedupEntry> dedup_canonical(const std::vector<PteSolution>& results);

struct Checkpoint {
    std::string fingerprint;
    std::vector<int> done;  // completed chunk ids, sorted

    static std::optional<Checkpoint> load(const std::string& path);
    void save_atomic(const std::string& path) const;
};

struct RunResult {
    bool completed = false;  // false when cancelled before the final pass
    long long raw_found = 0;
    long long budget_rejections = 0;
    size_t representatives = 0;
    std::vector<DedupEntry> dedup;  // filled when completed
};

// Executes the configured search: plans chunks, resumes from a matching
// checkpoint, runs workers, appends findings to the output file, and on
// completion rewrites it as the canonical deduplicated listing. The final
// file is byte-identical for any worker count or resume pattern.
RunResult run(const SearchConfig& cfg, const std::function<bool()>& cancel = {});

}  // namespace pte
