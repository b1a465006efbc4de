// Acceptance suite: one entry point per criterion, each printing PASS/FAIL
// with supporting detail. Exit status is nonzero when any selected criterion
// fails. Criterion 6 has an optional cluster-scale part behind --slow.
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pte/corpus.hpp"
#include "pte/search.hpp"
#include "pte/textio.hpp"
#include "test_util.hpp"

using namespace pte;
namespace fx = pte::fixtures;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        detail << "  " << (cond ? "ok" : "FAIL") << ": " << what << "\n";
        ok = ok && cond;
    }
    void note(const std::string& what) { detail << "  note: " << what << "\n"; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("pte_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains_equivalent(const std::vector<PteSolution>& haystack, const PteSolution& needle) {
    for (const auto& s : haystack)
        if (s.size() == needle.size() && equivalent(s, needle).has_value()) return true;
    return false;
}

// ---------------------------------------------------------------- criterion 1

void criterion1(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus;
    try {
        corpus = load_corpus(PTE_DATA_DIR);
    } catch (const std::exception& e) {
        c.require(false, std::string("corpus loads and re-verifies: ") + e.what());
        return;
    }
    c.require(true, "corpus loads with every entry at its claimed degree");

    std::map<int, int> ideal_sizes;
    int claimed_constants = 0;
    for (const auto& e : corpus.entries) {
        if (verify_degree(e.solution) == e.solution.size() - 1) ++ideal_sizes[e.solution.size()];
        if (e.claimed_constant) ++claimed_constants;
    }
    c.require(ideal_sizes[6] == 2, "size-6 entries present (integer and symmetric)");
    c.require(ideal_sizes[4] >= 1, "size-4 entry present");
    c.require(ideal_sizes[5] == 3, "both size-5 entries and the symmetric size-5 present");
    c.require(ideal_sizes[7] == 1, "size-7 entry present");
    c.require(ideal_sizes[8] == 1, "size-8 entry present");
    c.require(ideal_sizes[10] == 2, "both size-10 entries present");
    c.require(claimed_constants == 7, "all seven claimed constants matched up to a unit");
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime under 1 s (" + std::to_string(dt) + " s)");
}

// ---------------------------------------------------------------- criterion 2

void criterion2(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus = load_corpus(PTE_DATA_DIR);
    std::map<int, TableRowZi> rows;
    for (const auto& row : corpus.table_zi) rows[row.n] = row;

    for (int n : {2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14}) {
        GFactorization engine = lower_bound(n).lower;
        bool divides = rows[n].lower.divides_into(engine);
        std::string msg = "table lower bound divides engine bound at n=" + std::to_string(n);
        if (!divides) {
            TableComparison cmp = compare_table_row(rows[n]);
            msg += " (table factors " + cmp.table_extra.to_string() +
                   " are not derivable from the stated results)";
        }
        c.require(divides, msg);
    }
    for (int n : {2, 3, 4, 5, 6, 7, 11}) {
        TableComparison cmp = compare_table_row(rows[n]);
        std::string msg = "exact equality at n=" + std::to_string(n);
        if (!cmp.equal && !cmp.engine_extra.factors.empty())
            msg += " (engine additionally derives " + cmp.engine_extra.to_string() + ")";
        if (!cmp.equal && !cmp.table_extra.factors.empty())
            msg += " (engine misses " + cmp.table_extra.to_string() + ")";
        c.require(cmp.equal, msg);
    }
    TableComparison c9 = compare_table_row(rows[9]);
    c.require(c9.table_extra.to_string() == "(3,2)*(3,-2)",
              "row 9 reported partially underivable: " + c9.table_extra.to_string());
    TableComparison c13 = compare_table_row(rows[13]);
    c.require(c13.table_extra.to_string() == "(4,1)*(4,-1)",
              "row 13 reported partially underivable: " + c13.table_extra.to_string());
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime under 1 s (" + std::to_string(dt) + " s)");
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus = load_corpus(PTE_DATA_DIR);
    std::map<int, TableRowZi> rows;
    for (const auto& row : corpus.table_zi) rows[row.n] = row;

    GFactorization five = corpus_gcd_upper_bound(
        {fx::size5_a(), fx::size5_b(), conjugate_solution(fx::size5_b())});
    c.require(five.to_string() == "(1,1)^5*(2,1)*(2,-1)",
              "n=5 upper bound reproduced: " + five.to_string());
    c.require(rows[5].upper && five.factors == rows[5].upper->factors,
              "n=5 gcd equals the table upper bound");

    GFactorization eight = corpus_gcd_upper_bound({fx::size8_symmetric()});
    c.require(rows[8].upper && eight.factors == rows[8].upper->factors,
              "n=8 upper bound reproduced from the symmetric solution: " + eight.to_string());

    GFactorization ten = corpus_gcd_upper_bound(
        {fx::size10_a(), fx::size10_b(), conjugate_solution(fx::size10_a()),
         conjugate_solution(fx::size10_b())});
    c.require(rows[10].upper && ten.factors == rows[10].upper->factors,
              "n=10 gcd with conjugates consistent with the table: " + ten.to_string());
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime under 1 s (" + std::to_string(dt) + " s)");
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Criterion& c) {
    Corpus corpus = load_corpus(PTE_DATA_DIR);
    for (const auto& e : corpus.entries) {
        if (verify_degree(e.solution) != e.solution.size() - 1) continue;
        GFactorization cf = factor(constant(e.solution));
        bool ok = lower_bound(e.solution.size()).lower.divides_into(cf);
        c.require(ok, "lower_bound(" + std::to_string(e.solution.size()) + ") divides constant of " +
                          e.id);
    }
}

// ---------------------------------------------------------------- criterion 5

std::vector<PteSolution> engine_all_chunks(const SearchConfig& cfg) {
    std::vector<PteSolution> found;
    for (const auto& chunk : plan_chunks(cfg))
        search_chunk(cfg, chunk, [&](const PteSolution& s) { found.push_back(s); });
    return found;
}

std::vector<PteSolution> dedup_in_box(const std::vector<PteSolution>& sols, int box) {
    std::vector<PteSolution> kept;
    for (const auto& s : sols)
        if (oracle::in_box(s, box)) kept.push_back(s);
    std::vector<PteSolution> out;
    for (const auto& e : dedup_canonical(kept)) out.push_back(e.solution);
    return out;
}

bool same_classes(const std::vector<PteSolution>& a, const std::vector<PteSolution>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& s : a) {
        int hits = 0;
        for (const auto& t : b)
            if (equivalent(s, t).has_value()) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

void criterion5(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    const int S = 3;

    SearchConfig general;
    general.n = 3;
    general.mode = SearchMode::general;
    general.box = S;
    general.chunk_count = 1;
    auto engine = dedup_in_box(engine_all_chunks(general), S);
    auto brute = dedup_in_box(oracle::brute_general_size3(S), S);
    c.require(!brute.empty(), "brute force finds general size-3 solutions");
    c.require(same_classes(engine, brute),
              "general mode matches the 2n-1 variable enumeration (" +
                  std::to_string(engine.size()) + " classes)");

    SearchConfig odd;
    odd.n = 3;
    odd.mode = SearchMode::sym_odd;
    odd.box = S;
    odd.chunk_count = 1;
    auto engine_odd = dedup_in_box(engine_all_chunks(odd), S);
    auto brute_odd = dedup_in_box(oracle::brute_sym_odd_size3(S), S);
    c.require(!brute_odd.empty(), "brute force finds symmetric size-3 solutions");
    c.require(same_classes(engine_odd, brute_odd),
              "sym-odd mode matches the direct enumeration (" +
                  std::to_string(engine_odd.size()) + " classes)");
    double dt = seconds_since(t0);
    c.require(dt < 120.0, "runtime under 2 min (" + std::to_string(dt) + " s)");
}

// ---------------------------------------------------------------- criterion 6

void criterion6(Criterion& c, bool slow) {
    TempDir tmp;
    {
        auto t0 = std::chrono::steady_clock::now();
        SearchConfig cfg;
        cfg.n = 5;
        cfg.mode = SearchMode::sym_odd;
        cfg.box = 9;
        cfg.chunk_count = 8;
        cfg.workers = 1;
        cfg.out_path = tmp.path("n5.txt");
        RunResult r = run(cfg);
        c.require(r.completed, "sym-odd n=5 box 9 completes");
        auto sols = parse_solutions(slurp(cfg.out_path));
        c.require(contains_equivalent(sols, fx::size5_symmetric()),
                  "finds the published symmetric size-5 solution");
        double dt = seconds_since(t0);
        c.require(dt < 600.0, "single-threaded runtime under 10 min (" + std::to_string(dt) + " s)");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        SearchConfig cfg;
        cfg.n = 6;
        cfg.mode = SearchMode::sym_even;
        cfg.box = 8;
        cfg.chunk_count = 8;
        cfg.workers = 1;
        cfg.out_path = tmp.path("n6.txt");
        RunResult r = run(cfg);
        c.require(r.completed, "sym-even n=6 box 8 completes");
        auto sols = parse_solutions(slurp(cfg.out_path));
        c.require(contains_equivalent(sols, fx::size6_symmetric()),
                  "finds the published symmetric size-6 solution");
        double dt = seconds_since(t0);
        c.require(dt < 600.0, "single-threaded runtime under 10 min (" + std::to_string(dt) + " s)");
    }
    if (slow) {
        SearchConfig cfg;
        cfg.n = 10;
        cfg.mode = SearchMode::sym_even;
        cfg.box = 12;
        cfg.chunk_count = 64;
        cfg.sieve = auto_sieve_primes(10);
        cfg.out_path = tmp.path("n10.txt");
        cfg.checkpoint_path = tmp.path("n10.ckpt");
        c.note("sieve primes: " + cfg.sieve[0].to_string() + ", " + cfg.sieve[1].to_string());
        RunResult r = run(cfg);
        c.require(r.completed, "sieved sym-even n=10 box 12 completes");
        auto sols = parse_solutions(slurp(cfg.out_path));
        c.require(contains_equivalent(sols, fx::size10_a()),
                  "finds the first published size-10 solution");
        c.require(contains_equivalent(sols, fx::size10_b()),
                  "finds the second published size-10 solution");
    } else {
        c.note("sieved size-10 reproduction (hours of CPU) skipped; run with --slow");
    }
}

// ---------------------------------------------------------------- criterion 7

void criterion7(Criterion& c) {
    CompletionTrace trace;
    auto out = complete_general({GaussianInt(1, 0), GaussianInt(5, 0)},
                                {GaussianInt(2, 0), GaussianInt(3, 0)}, &trace);
    c.require(out.size() == 1, "completion yields exactly one solution");
    c.require(trace.f.coeff(1) == GaussianRational(GaussianInt(1, 0), BigInt(12)) &&
                  trace.f.coeff(0) == GaussianRational(GaussianInt(-1, 0), BigInt(2)),
              "interpolated f equals (z-6)/12");
    c.require(trace.constant == GaussianInt(12, 0), "constant C = 12");
    c.require(trace.x_completed == std::vector<GaussianInt>{GaussianInt(6, 0)},
              "completed x3 = 6");
    c.require(trace.y_completed == std::vector<GaussianInt>{GaussianInt(7, 0)},
              "recovered y3 = 7");
    if (!out.empty()) {
        c.require(out[0].x() == fx::gv({{1, 0}, {5, 0}, {6, 0}}) &&
                      out[0].y() == fx::gv({{2, 0}, {3, 0}, {7, 0}}),
                  "assembled solution is {1,5,6} = {2,3,7}");
    }
}

// ---------------------------------------------------------------- criterion 8

void criterion8(Criterion& c) {
    const int N = 1000;
    auto g = testutil::rng(20268);

    {  // formulation equivalence
        int tested = 0;
        bool ok = true;
        while (tested < N) {
            int n = 2 + (int)testutil::rand_ll(g, 0, 4);
            std::vector<GaussianInt> x, y;
            for (int i = 0; i < n; ++i) {
                x.push_back(testutil::rand_gauss(g, 6));
                y.push_back(testutil::rand_gauss(g, 6));
            }
            std::optional<PteSolution> s;
            try {
                s.emplace(x, y, 1);
            } catch (const std::invalid_argument&) {
                continue;
            }
            ++tested;
            int d = verify_degree(*s);
            Polynomial diff = poly_from_roots(s->x()) - poly_from_roots(s->y());
            ok = ok && diff.degree() == n - 1 - d;
            for (int k = 1; k <= n - 1; ++k)
                ok = ok && falling_factorial_check(*s, k) == (d >= k);
        }
        c.require(ok, "power sums / degree drop / falling factorials agree (1000 cases)");
    }

    {  // affine closure and the constant law
        bool ok = true;
        auto ideal = fx::all_ideal();
        for (int i = 0; i < N; ++i) {
            const PteSolution& s =
                ideal[(size_t)testutil::rand_ll(g, 0, (long long)ideal.size() - 1)];
            GaussianInt m = testutil::rand_gauss_nonzero(g, 2);
            AffineMap f{GaussianRational(m), GaussianRational(testutil::rand_gauss(g, 5))};
            PteSolution t = affine_apply(s, f);
            ok = ok && verify_degree(t) == verify_degree(s);
            GaussianInt mn{1, 0};
            for (int j = 0; j < s.size(); ++j) mn = mn * m;
            ok = ok && constant(t) == constant(s) * mn;
        }
        c.require(ok, "affine closure and C' = C*M^n (1000 cases)");
    }

    {  // conjugation closure
        bool ok = true;
        auto ideal = fx::all_ideal();
        for (int i = 0; i < N; ++i) {
            const PteSolution& s =
                ideal[(size_t)testutil::rand_ll(g, 0, (long long)ideal.size() - 1)];
            AffineMap f{GaussianRational(testutil::rand_gauss_nonzero(g, 2)),
                        GaussianRational(testutil::rand_gauss(g, 5))};
            PteSolution t = affine_apply(s, f);
            PteSolution ct = conjugate_solution(t);
            ok = ok && verify_degree(ct) == verify_degree(t);
            ok = ok && constant(ct) == constant(t).conj();
        }
        c.require(ok, "conjugation closure (1000 cases)");
    }

    {  // newton round trips
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            int n = 1 + (int)testutil::rand_ll(g, 0, 11);
            std::vector<GaussianRational> e;
            for (int j = 0; j < n; ++j)
                e.emplace_back(testutil::rand_gauss(g, 9), BigInt(testutil::rand_ll(g, 1, 4)));
            auto back = elem_from_power(power_from_elem(e, n), n);
            ok = ok && back == e;
        }
        c.require(ok, "newton identity round trips (1000 cases)");
    }

    {  // exact arithmetic invariants
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            GaussianInt a = testutil::rand_gauss(g, 900);
            GaussianInt b = testutil::rand_gauss_nonzero(g, 35);
            auto d = divrem(a, b);
            ok = ok && a == d.q * b + d.r && BigInt::cmp(d.r.norm(), b.norm()) < 0;

            GaussianInt x = testutil::rand_gauss(g, 200);
            if (!x.is_zero() || !b.is_zero()) {
                GaussianInt gg = gcd(x, b), qa, qb;
                ok = ok && divides(gg, x, &qa) && divides(gg, b, &qb);
                if (!qa.is_zero() && !qb.is_zero()) ok = ok && gcd(qa, qb).is_unit();
            }

            GaussianInt z = testutil::rand_gauss_nonzero(g, 300);
            GFactorization f = factor(z);
            ok = ok && f.value() == z;
            for (const auto& [p, e] : f.factors) {
                BigInt np = p.norm();
                ok = ok && is_canonical(p);
                ok = ok && (np.is_probab_prime() ||
                            (p.im.is_zero() && p.re.is_probab_prime()));
            }

            GaussianInt w = testutil::rand_gauss(g, 40);
            auto r = sqrt_exact(w * w);
            ok = ok && r.has_value() && *r * *r == w * w;
        }
        c.require(ok, "divrem/gcd/factor/sqrt invariants (1000 cases)");
    }

    {  // consecutive-product containment, with the inert counterexample
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            long long ps[] = {2, 5, 13};
            long long p = ps[testutil::rand_ll(g, 0, 2)];
            int s = (int)testutil::rand_ll(g, 1, 3);
            GaussianInt t = testutil::rand_gauss(g, 50);
            GaussianInt prod{1, 0};
            for (long long j = 0; j < s * p; ++j) prod = prod * (t + GaussianInt(j, 0));
            for (const auto& pi : primes_above(p)) {
                GaussianInt pis{1, 0};
                for (int j = 0; j < s; ++j) pis = pis * pi;
                ok = ok && divides(pis, prod);
            }
        }
        c.require(ok, "ramified/split consecutive products (1000 cases)");
        GaussianInt t(0, 1), prod{1, 0};
        bool factor3 = false;
        for (long long j = 0; j < 9; ++j) {
            GaussianInt term = t + GaussianInt(j, 0);
            factor3 = factor3 || divides(GaussianInt(3, 0), term);
            prod = prod * term;
        }
        c.require(!factor3 && !divides(GaussianInt(3, 0), prod),
                  "inert p=3 counterexample at t=i confirmed");
    }

    {  // residue pairing on the corpus
        bool ok = true;
        Corpus corpus = load_corpus(PTE_DATA_DIR);
        for (const auto& e : corpus.entries) {
            if (verify_degree(e.solution) != e.solution.size() - 1) continue;
            for (const auto& [q, exp] : factor(constant(e.solution)).factors)
                ok = ok && pairing_mod_q(e.solution, q);
        }
        c.require(ok, "residue-multiset pairing for every prime dividing a corpus constant");
    }
}

// ---------------------------------------------------------------- criterion 9

void criterion9(Criterion& c) {
    TempDir tmp;
    SearchConfig cfg;
    cfg.n = 5;
    cfg.mode = SearchMode::sym_odd;
    cfg.box = 9;
    cfg.chunk_count = 16;

    std::string reference;
    for (int workers : {1, 4, 8}) {
        SearchConfig w = cfg;
        w.workers = workers;
        w.out_path = tmp.path("w" + std::to_string(workers) + ".txt");
        w.checkpoint_path = tmp.path("w" + std::to_string(workers) + ".ckpt");
        RunResult r = run(w);
        c.require(r.completed, "run completes with " + std::to_string(workers) + " workers");
        std::string got = slurp(w.out_path);
        if (workers == 1) {
            reference = got;
            c.require(!reference.empty(), "single-worker output is nonempty");
        } else {
            c.require(got == reference,
                      "output with " + std::to_string(workers) + " workers is byte-identical");
        }
    }

    SearchConfig killed = cfg;
    killed.workers = 2;
    killed.out_path = tmp.path("resumed.txt");
    killed.checkpoint_path = tmp.path("resumed.ckpt");
    int budget = 5;
    RunResult partial = run(killed, [&]() { return budget-- <= 0; });
    c.require(!partial.completed, "cancelled run stops before the final pass");
    RunResult resumed = run(killed);
    c.require(resumed.completed, "resume completes the remaining chunks");
    c.require(slurp(killed.out_path) == reference, "kill/resume output is byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--slow"))
            slow = true;
        else {
            std::cerr << "usage: acceptance [--criterion N] [--slow]\n";
            return 2;
        }
    }

    const std::map<int, std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {1, {"corpus verification", criterion1}},
        {2, {"reference table lower bounds", criterion2}},
        {3, {"upper bounds by corpus gcd", criterion3}},
        {4, {"bound soundness against corpus constants", criterion4}},
        {5, {"oracle equivalence with direct enumeration", criterion5}},
        {6, {"search reproduction at desk scale", [slow](Criterion& c) { criterion6(c, slow); }}},
        {7, {"worked interpolation trace", criterion7}},
        {8, {"randomized property suites", criterion8}},
        {9, {"search determinism across workers and resume", criterion9}},
    };

    bool all_ok = true;
    for (const auto& [num, entry] : criteria) {
        if (only && num != only) continue;
        Criterion c;
        try {
            entry.second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("unexpected exception: ") + e.what());
        }
        std::cout << "criterion " << num << " (" << entry.first << "): "
                  << (c.ok ? "PASS" : "FAIL") << "\n"
                  << c.detail.str();
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
