#include "pte/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "pte/textio.hpp"

namespace pte {

std::string to_string(SearchMode m) {
    switch (m) {
        case SearchMode::general: return "general";
        case SearchMode::sym_even: return "sym-even";
        default: return "sym-odd";
    }
}

SearchMode parse_search_mode(std::string_view s) {
    if (s == "general") return SearchMode::general;
    if (s == "sym-even") return SearchMode::sym_even;
    if (s == "sym-odd") return SearchMode::sym_odd;
    throw std::invalid_argument("unknown search mode '" + std::string(s) + "'");
}

void SearchConfig::validate() const {
    if (box < 1) throw std::invalid_argument("search: box must be >= 1");
    if (chunk_count < 1) throw std::invalid_argument("search: chunk count must be >= 1");
    if (n > 40) throw std::invalid_argument("search: size out of supported range");
    switch (mode) {
        case SearchMode::general:
            if (n < 3) throw std::invalid_argument("search: general mode needs n >= 3");
            if (effective_k() < 2 || effective_k() > n - 1)
                throw std::invalid_argument("search: split k must satisfy 2 <= k <= n-1");
            break;
        case SearchMode::sym_even:
            if (n < 4 || n % 2 != 0)
                throw std::invalid_argument("search: sym-even needs even n >= 4");
            break;
        case SearchMode::sym_odd:
            if (n < 3 || n % 2 != 1)
                throw std::invalid_argument("search: sym-odd needs odd n >= 3");
            if (!sieve.empty())
                throw std::invalid_argument("search: congruence sieving is not available "
                                            "in sym-odd mode");
            break;
    }
    if (!sieve.empty()) {
        if (sieve.size() != 2)
            throw std::invalid_argument("search: sieve needs exactly two primes");
        for (const auto& q : sieve) {
            if (!is_canonical(q))
                throw std::invalid_argument("search: sieve prime " + q.to_string() +
                                            " is not canonical");
            BigInt nq = q.norm();
            bool prime = nq.is_probab_prime();
            if (!prime && nq.is_perfect_square()) {
                BigInt p = nq.isqrt(), qq, r;
                BigInt::tdiv_qr(p, BigInt(4), qq, r);
                prime = p.is_probab_prime() && r == BigInt(3);
            }
            if (!prime)
                throw std::invalid_argument("search: sieve value " + q.to_string() +
                                            " is not prime");
        }
    }
}

std::string SearchConfig::canonical_text() const {
    std::ostringstream os;
    os << "n=" << n << ";mode=" << to_string(mode) << ";k=" << effective_k() << ";box=" << box
       << ";sieve=";
    if (sieve.empty()) {
        os << "none";
    } else {
        for (size_t i = 0; i < sieve.size(); ++i) {
            if (i) os << ",";
            os << sieve[i].to_string();
        }
    }
    os << ";chunks=" << chunk_count;
    return os.str();
}

std::string SearchConfig::fingerprint() const {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::vector<GaussianInt> auto_sieve_primes(int n) {
    GFactorization lb = lower_bound(n).lower;
    std::vector<GaussianInt> primes;
    for (const auto& [p, e] : lb.factors) primes.push_back(p);
    // largest norms first; canonical order breaks ties, so 3+2i precedes 3-2i
    std::sort(primes.begin(), primes.end(), [](const GaussianInt& a, const GaussianInt& b) {
        int c = BigInt::cmp(a.norm(), b.norm());
        if (c) return c > 0;
        return gauss_less(a, b);
    });
    if (primes.size() > 2) primes.resize(2);
    return primes;
}

namespace {

std::vector<GaussianInt> box_values(int S, bool half_plane_only) {
    std::vector<GaussianInt> out;
    for (long long a = -S; a <= S; ++a)
        for (long long b = -S; b <= S; ++b) {
            if (half_plane_only && !(a > 0 || (a == 0 && b >= 0))) continue;
            out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end(), gauss_less);
    return out;
}

}  // namespace

std::vector<GaussianInt> first_variable_domain(const SearchConfig& cfg) {
    std::vector<GaussianInt> out;
    if (cfg.mode == SearchMode::sym_even) out.emplace_back(0, 0);
    for (long long a = 1; a <= cfg.box; ++a)
        for (long long b = -a + 1; b <= a; ++b) out.emplace_back(a, b);
    std::sort(out.begin(), out.end(), gauss_less);
    return out;
}

std::vector<Chunk> plan_chunks(const SearchConfig& cfg) {
    cfg.validate();
    const long long N = (long long)first_variable_domain(cfg).size();
    const long long C = cfg.chunk_count;
    std::vector<Chunk> out;
    for (long long i = 0; i < C; ++i)
        out.push_back({(int)i, i * N / C, (i + 1) * N / C});
    return out;
}

// ---------------------------------------------------------------------------
// interpolation completion

namespace {

// Integer-cleared interpolation through (y_j, 1/D_j): returns numerator
// coefficients N and scalar Delta with f = N/Delta, deg f <= k-1.
bool cleared_interpolation(const std::vector<GaussianInt>& ys,
                           const std::vector<GaussianInt>& dens,
                           std::vector<GaussianInt>& num, GaussianInt& delta) {
    const size_t k = ys.size();
    // weights w_j = prod_{l != j} (y_j - y_l)
    std::vector<GaussianInt> w(k, GaussianInt{1, 0});
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < k; ++l) {
            if (l == j) continue;
            GaussianInt d = ys[j] - ys[l];
            if (d.is_zero()) return false;  // duplicate abscissa
            w[j] = w[j] * d;
        }
    delta = GaussianInt{1, 0};
    for (size_t j = 0; j < k; ++j) delta = delta * (dens[j] * w[j]);
    num.assign(k, GaussianInt{0, 0});
    std::vector<GaussianInt> basis;  // prod_{l != j} (z - y_l), rebuilt per j
    for (size_t j = 0; j < k; ++j) {
        basis.assign(1, GaussianInt{1, 0});
        for (size_t l = 0; l < k; ++l) {
            if (l == j) continue;
            basis.push_back(GaussianInt{0, 0});
            for (size_t t = basis.size() - 1; t-- > 0;) {
                GaussianInt keep = basis[t];
                if (t + 1 < basis.size()) basis[t + 1] += keep;
                basis[t] = -(ys[l] * keep);
            }
        }
        // delta / (dens[j] * w[j])
        GaussianInt scale{1, 0};
        for (size_t l = 0; l < k; ++l)
            if (l != j) scale = scale * (dens[l] * w[l]);
        for (size_t t = 0; t < basis.size(); ++t) num[t] += basis[t] * scale;
    }
    return true;
}

}  // namespace

std::vector<PteSolution> complete_general(const std::vector<GaussianInt>& x_prefix,
                                          const std::vector<GaussianInt>& y_prefix,
                                          CompletionTrace* trace, unsigned root_budget_bits) {
    const int k = (int)y_prefix.size();
    const int nx = (int)x_prefix.size();
    if (k < 1 || nx < 1) throw std::invalid_argument("complete_general: empty prefix");
    const int n = nx + k - 1;

    // pairwise-distinct y prefix, disjoint from the x prefix
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b)
            if (y_prefix[(size_t)a] == y_prefix[(size_t)b]) return {};
        for (int i = 0; i < nx; ++i)
            if (y_prefix[(size_t)a] == x_prefix[(size_t)i]) return {};
    }

    std::vector<GaussianInt> dens(y_prefix.size(), GaussianInt{1, 0});
    for (size_t j = 0; j < y_prefix.size(); ++j)
        for (const auto& x : x_prefix) dens[j] = dens[j] * (y_prefix[j] - x);

    std::vector<GaussianInt> num;
    GaussianInt delta;
    if (!cleared_interpolation(y_prefix, dens, num, delta)) return {};

    // leading coefficient must be 1/C with C a nonzero Gaussian integer
    const GaussianInt lead = num[(size_t)k - 1];
    if (lead.is_zero()) return {};
    GaussianInt c;
    if (!divides(lead, delta, &c) || c.is_zero()) return {};

    // g = C*f must be monic with Gaussian-integer coefficients
    std::vector<GaussianInt> g(num.size());
    for (size_t t = 0; t < num.size(); ++t)
        if (!divides(lead, num[t], &g[t])) return {};

    std::vector<GaussianInt> x_completed;
    if (k >= 2) {
        std::vector<std::pair<GaussianInt, int>> roots;
        try {
            roots = gaussian_roots_int(g, root_budget_bits);
        } catch (const root_budget_error&) {
            throw;  // callers count these as unresolvable candidates
        }
        int total = 0;
        for (const auto& [r, m] : roots) total += m;
        if (total < k - 1) return {};
        for (const auto& [r, m] : roots)
            for (int t = 0; t < m; ++t) x_completed.push_back(r);
    }

    std::vector<GaussianInt> all_x = x_prefix;
    all_x.insert(all_x.end(), x_completed.begin(), x_completed.end());

    // remaining y's: roots of prod(z - x_i) - C after removing the known y's
    std::vector<GaussianInt> prod{GaussianInt{1, 0}};
    for (const auto& x : all_x) {
        prod.push_back(GaussianInt{0, 0});
        for (size_t t = prod.size() - 1; t-- > 0;) {
            GaussianInt keep = prod[t];
            if (t + 1 < prod.size()) prod[t + 1] += keep;
            prod[t] = -(x * keep);
        }
    }
    prod[0] -= c;
    for (const auto& y : y_prefix)
        if (!divide_linear_exact(prod, y))
            throw std::logic_error("complete_general: known y does not divide the difference");

    std::vector<GaussianInt> y_rest;
    if (prod.size() > 1) {
        auto roots = gaussian_roots_int(prod, root_budget_bits);
        int total = 0;
        for (const auto& [r, m] : roots) total += m;
        if (total < (int)prod.size() - 1) return {};
        for (const auto& [r, m] : roots)
            for (int t = 0; t < m; ++t) y_rest.push_back(r);
    }

    std::vector<GaussianInt> all_y = y_prefix;
    all_y.insert(all_y.end(), y_rest.begin(), y_rest.end());

    if (trace) {
        std::vector<GaussianRational> fc(num.size());
        for (size_t t = 0; t < num.size(); ++t)
            fc[t] = GaussianRational(num[t]) / GaussianRational(delta);
        trace->f = Polynomial(std::move(fc));
        trace->constant = c;
        trace->x_completed = x_completed;
        trace->y_completed = y_rest;
    }

    std::vector<PteSolution> out;
    try {
        PteSolution s = PteSolution::claiming_ideal(std::move(all_x), std::move(all_y));
        if (verify_degree(s) != n - 1)
            throw std::logic_error("complete_general: completed candidate fails verification");
        out.push_back(std::move(s));
    } catch (const std::invalid_argument&) {
        return {};
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

struct Slot {
    bool is_x;
    int idx;  // 1-based
};

long long pack_residue(const GaussianInt& r) {
    long long re = r.re.to_ll(), im = r.im.to_ll();
    return (re + 64) * 256 + (im + 64);
}

class Enumerator {
  public:
    Enumerator(const SearchConfig& cfg, const Chunk& chunk,
               const std::function<void(const PteSolution&)>& emit)
        : cfg_(cfg), chunk_(chunk), emit_(emit) {
        wspace_ = cfg.mode == SearchMode::sym_even;
        sieved_ = !cfg.sieve.empty();
        if (sieved_) {
            q1_ = cfg.sieve[0];
            q2_ = cfg.sieve[1];
        }
        const int n = cfg.n;
        switch (cfg.mode) {
            case SearchMode::general: {
                const int k = cfg.effective_k();
                nx_ = n - k + 1;
                ny_ = k;
                xs_.push_back(GaussianInt{0, 0});
                cx_.push_back(cong(GaussianInt{0, 0}));
                slots_.push_back({false, 1});
                for (int i = 2; i <= std::max(nx_, ny_); ++i) {
                    if (i <= nx_) slots_.push_back({true, i});
                    if (i <= ny_) slots_.push_back({false, i});
                }
                all_ = box_values(cfg.box, false);
                break;
            }
            case SearchMode::sym_even: {
                const int m = n / 2;
                int kw = std::min((m + 2) / 2, m - 1);
                if (kw < 1) kw = 1;
                nx_ = m - kw + 1;
                ny_ = kw;
                for (int i = 1; i <= std::max(nx_, ny_); ++i) {
                    if (i <= nx_) slots_.push_back({true, i});
                    if (i <= ny_) slots_.push_back({false, i});
                }
                all_ = box_values(cfg.box, true);
                break;
            }
            case SearchMode::sym_odd: {
                const int m = (n - 1) / 2;
                nx_ = m + 1;
                ny_ = 0;
                for (int i = 1; i <= nx_; ++i) slots_.push_back({true, i});
                all_ = box_values(cfg.box, false);
                break;
            }
        }
        first_domain_ = first_variable_domain(cfg);
        if (sieved_) {
            res1_.resize(all_.size());
            res2_.resize(all_.size());
            for (size_t i = 0; i < all_.size(); ++i) {
                res1_[i] = pack_residue(divrem(cong(all_[i]), q1_).r);
                res2_[i] = pack_residue(divrem(cong(all_[i]), q2_).r);
                bucket1_[res1_[i]].push_back((int)i);
                bucket2_[res2_[i]].push_back((int)i);
            }
        }
    }

    ChunkStats run() {
        assign(0);
        return stats_;
    }

  private:
    const SearchConfig& cfg_;
    const Chunk& chunk_;
    const std::function<void(const PteSolution&)>& emit_;
    bool wspace_ = false, sieved_ = false;
    GaussianInt q1_, q2_;
    int nx_ = 0, ny_ = 0;
    std::vector<Slot> slots_;
    std::vector<GaussianInt> all_, first_domain_;
    std::vector<long long> res1_, res2_;
    std::unordered_map<long long, std::vector<int>> bucket1_, bucket2_;

    std::vector<GaussianInt> xs_, ys_, cx_, cy_;
    GaussianInt srun_{0, 0};  // sum of cong(x_j) - cong(y_j) over assigned slots
    int last_x_index_ = 0, last_y_index_ = 0;
    ChunkStats stats_;

    GaussianInt cong(const GaussianInt& v) const { return wspace_ ? v * v : v; }

    bool srun_zero_mod_q2() const { return divrem(srun_, q2_).r.is_zero(); }

    void push_x(const GaussianInt& v) {
        xs_.push_back(v);
        cx_.push_back(cong(v));
        srun_ += cx_.back();
    }
    void pop_x() {
        srun_ -= cx_.back();
        xs_.pop_back();
        cx_.pop_back();
    }
    void push_y(const GaussianInt& v) {
        ys_.push_back(v);
        cy_.push_back(cong(v));
        srun_ -= cy_.back();
    }
    void pop_y() {
        srun_ += cy_.back();
        ys_.pop_back();
        cy_.pop_back();
    }

    bool is_anchor_slot(size_t pos) const {
        return pos == 0 && cfg_.mode != SearchMode::general;
    }

    void assign(size_t pos) {
        if (pos == slots_.size()) {
            finish();
            return;
        }
        const Slot slot = slots_[pos];
        // the first enumerated slot always draws from the chunked anchor domain
        if (pos == 0) {
            for (long long i = chunk_.lo; i < chunk_.hi; ++i) {
                const GaussianInt& v = first_domain_[(size_t)i];
                if (sieved_ && !slot.is_x) {
                    // general mode: y1 pairs with x1 = 0 modulo q1
                    if (!divrem(cong(v), q1_).r.is_zero()) continue;
                }
                if (slot.is_x) {
                    push_x(v);
                    int keep = last_x_index_;
                    last_x_index_ = 0;
                    assign(pos + 1);
                    last_x_index_ = keep;
                    pop_x();
                } else {
                    push_y(v);
                    int keep = last_y_index_;
                    last_y_index_ = 0;
                    assign(pos + 1);
                    last_y_index_ = keep;
                    pop_y();
                }
            }
            return;
        }
        if (slot.is_x)
            assign_x(pos, slot.idx);
        else
            assign_y(pos, slot.idx);
    }

    void assign_x(size_t pos, int idx) {
        if (!sieved_) {
            // non-decreasing chain within the non-anchor x slots
            int start = idx == 2 ? 0 : last_x_index_;
            for (int i = start; i < (int)all_.size(); ++i) {
                push_x(all_[(size_t)i]);
                int keep = last_x_index_;
                last_x_index_ = i;
                assign(pos + 1);
                last_x_index_ = keep;
                pop_x();
            }
            return;
        }
        // sieved: rolling q2 condition (x_idx - y_{idx-1}) * srun = 0 mod q2,
        // applied when the previous pair is complete
        bool constrained = idx >= 2 && (idx - 1) <= (int)ys_.size() && !srun_zero_mod_q2();
        if (constrained) {
            long long want = pack_residue(divrem(cy_[(size_t)(idx - 2)], q2_).r);
            auto it = bucket2_.find(want);
            if (it == bucket2_.end()) return;
            for (int i : it->second) {
                push_x(all_[(size_t)i]);
                assign(pos + 1);
                pop_x();
            }
        } else {
            for (size_t i = 0; i < all_.size(); ++i) {
                push_x(all_[i]);
                assign(pos + 1);
                pop_x();
            }
        }
    }

    void assign_y(size_t pos, int idx) {
        if (!sieved_) {
            // strictly ascending chain; in general mode it starts at y2 since
            // y1 is the rotation anchor
            int chain_first = cfg_.mode == SearchMode::general ? 2 : 1;
            int start = idx == chain_first ? 0 : last_y_index_ + 1;
            for (int i = start; i < (int)all_.size(); ++i) {
                const GaussianInt& v = all_[(size_t)i];
                if (cfg_.mode == SearchMode::general && !ys_.empty() && v == ys_.front())
                    continue;  // anchor y1 excluded from the ordered chain
                push_y(v);
                int keep = last_y_index_;
                last_y_index_ = i;
                assign(pos + 1);
                last_y_index_ = keep;
                pop_y();
            }
            return;
        }
        // sieved: y_idx pairs with x_idx modulo q1 when x_idx is enumerated
        std::vector<int> const* pool = nullptr;
        std::vector<int> fallback;
        if (idx <= (int)cx_.size()) {
            long long want = pack_residue(divrem(cx_[(size_t)(idx - 1)], q1_).r);
            auto it = bucket1_.find(want);
            if (it == bucket1_.end()) return;
            pool = &it->second;
        } else {
            fallback.resize(all_.size());
            for (size_t i = 0; i < all_.size(); ++i) fallback[i] = (int)i;
            pool = &fallback;
        }
        for (int i : *pool) {
            const GaussianInt& v = all_[(size_t)i];
            bool dup = false;
            for (const auto& prev : ys_)
                if (prev == v) dup = true;
            if (dup) continue;
            push_y(v);
            assign(pos + 1);
            pop_y();
        }
    }

    void finish() {
        ++stats_.candidates;
        try {
            switch (cfg_.mode) {
                case SearchMode::general: {
                    for (auto& s : complete_general(xs_, ys_)) emit_(s);
                    break;
                }
                case SearchMode::sym_even: {
                    // cx_/cy_ already hold the squares
                    for (auto& w : complete_general(cx_, cy_)) expand_sym_even(w);
                    break;
                }
                case SearchMode::sym_odd: {
                    complete_sym_odd();
                    break;
                }
            }
        } catch (const root_budget_error&) {
            ++stats_.budget_rejections;
        }
    }

    void expand_sym_even(const PteSolution& w) {
        std::vector<GaussianInt> zx, zy;
        for (const auto& wv : w.x()) {
            auto s = sqrt_exact(wv);
            if (!s) return;
            zx.push_back(*s);
            zx.push_back(-*s);
        }
        for (const auto& wv : w.y()) {
            auto s = sqrt_exact(wv);
            if (!s) return;
            zy.push_back(*s);
            zy.push_back(-*s);
        }
        PteSolution s = PteSolution::claiming_ideal(std::move(zx), std::move(zy));
        if (verify_degree(s) != cfg_.n - 1)
            throw std::logic_error("sym-even expansion fails verification");
        emit_(s);
    }

    void complete_sym_odd() {
        const int m = (cfg_.n - 1) / 2;
        const int dim = m + 1;
        // rows: sum_t a_t x^{2t+1} + K = -x^{2m+1}, unknowns (a_{m-1},...,a_0,K)
        std::vector<std::vector<GaussianInt>> mat((size_t)dim,
                                                  std::vector<GaussianInt>((size_t)dim));
        std::vector<GaussianInt> rhs((size_t)dim);
        for (int r = 0; r < dim; ++r) {
            const GaussianInt& x = xs_[(size_t)r];
            GaussianInt x2 = x * x;
            std::vector<GaussianInt> odd((size_t)m + 1);
            odd[0] = x;  // x^1
            for (int t = 1; t <= m; ++t) odd[(size_t)t] = odd[(size_t)t - 1] * x2;
            for (int t = 0; t < m; ++t) mat[(size_t)r][(size_t)(m - 1 - t)] = odd[(size_t)t];
            mat[(size_t)r][(size_t)m] = GaussianInt{1, 0};
            rhs[(size_t)r] = -odd[(size_t)m];
        }
        GaussianInt det = determinant(mat);
        if (det.is_zero()) return;  // singular prefix
        std::vector<GaussianInt> sol((size_t)dim);
        for (int c = 0; c < dim; ++c) {
            auto mc = mat;
            for (int r = 0; r < dim; ++r) mc[(size_t)r][(size_t)c] = rhs[(size_t)r];
            GaussianInt num = determinant(mc);
            if (!divides(det, num, &sol[(size_t)c])) return;  // non-integral coefficient
        }
        // P(z) = z^(2m+1) + a_{m-1} z^(2m-1) + ... + a_0 z + K
        std::vector<GaussianInt> P((size_t)cfg_.n + 1, GaussianInt{0, 0});
        P[(size_t)cfg_.n] = GaussianInt{1, 0};
        for (int t = 0; t < m; ++t) P[(size_t)(2 * t + 1)] = sol[(size_t)(m - 1 - t)];
        P[0] = sol[(size_t)m];
        for (const auto& x : xs_)
            if (!divide_linear_exact(P, x))
                throw std::logic_error("sym-odd: prefix root does not divide its polynomial");
        std::vector<GaussianInt> rest;
        if (P.size() > 1) {
            auto roots = gaussian_roots_int(P);
            int total = 0;
            for (const auto& [r, mm] : roots) total += mm;
            if (total < (int)P.size() - 1) return;
            for (const auto& [r, mm] : roots)
                for (int t = 0; t < mm; ++t) rest.push_back(r);
        }
        std::vector<GaussianInt> X = xs_;
        X.insert(X.end(), rest.begin(), rest.end());
        std::vector<GaussianInt> Y;
        for (const auto& v : X) Y.push_back(-v);
        try {
            PteSolution s = PteSolution::claiming_ideal(std::move(X), std::move(Y));
            if (verify_degree(s) != cfg_.n - 1)
                throw std::logic_error("sym-odd completion fails verification");
            emit_(s);
        } catch (const std::invalid_argument&) {
            // X == -X (forced K = 0); not a valid solution
        }
    }

    static GaussianInt determinant(std::vector<std::vector<GaussianInt>> a) {
        // fraction-free (Bareiss) elimination
        const size_t n = a.size();
        GaussianInt prev{1, 0};
        int sign = 1;
        for (size_t p = 0; p < n; ++p) {
            if (a[p][p].is_zero()) {
                size_t swap = p + 1;
                while (swap < n && a[swap][p].is_zero()) ++swap;
                if (swap == n) return GaussianInt{0, 0};
                std::swap(a[p], a[swap]);
                sign = -sign;
            }
            for (size_t r = p + 1; r < n; ++r) {
                for (size_t c = p + 1; c < n; ++c) {
                    GaussianInt t = a[r][c] * a[p][p] - a[r][p] * a[p][c];
                    GaussianInt q;
                    if (!divides(prev, t, &q))
                        throw std::logic_error("determinant: non-exact Bareiss step");
                    a[r][c] = q;
                }
                a[r][p] = GaussianInt{0, 0};
            }
            prev = a[p][p];
        }
        GaussianInt d = a[n - 1][n - 1];
        return sign < 0 ? -d : d;
    }
};

}  // namespace

ChunkStats search_chunk(const SearchConfig& cfg, const Chunk& chunk,
                        const std::function<void(const PteSolution&)>& emit) {
    cfg.validate();
    Enumerator e(cfg, chunk, emit);
    return e.run();
}

// ---------------------------------------------------------------------------
// dedup

namespace {

std::string class_bucket_key(const PteSolution& s) {
    // invariant under z -> Mz + K: exponents shift by multiples of n, and
    // primes at a multiple of n may appear or vanish entirely, so those are
    // dropped from the key
    GFactorization f = factor(constant(s));
    std::vector<std::string> parts;
    for (const auto& [p, e] : f.factors)
        if (e % s.size() != 0)
            parts.push_back(p.norm().to_string() + "^" + std::to_string(e % s.size()));
    std::sort(parts.begin(), parts.end());
    std::string key = "n" + std::to_string(s.size());
    for (auto& p : parts) key += "|" + p;
    return key;
}

std::string translated_key(const PteSolution& s) {
    AffineMap t{GaussianRational(1, 0), GaussianRational(-s.x().front())};
    return emit_solution(affine_apply(s, t));
}

}  // namespace

std::vector<DedupEntry> dedup_canonical(const std::vector<PteSolution>& results) {
    // drop exact duplicates first
    std::vector<PteSolution> unique;
    {
        std::set<std::string> seen;
        for (const auto& s : results)
            if (seen.insert(emit_solution(s)).second) unique.push_back(s);
    }
    for (const auto& s : unique) {
        if (s.size() != unique.front().size())
            throw std::invalid_argument("dedup_canonical: mixed sizes");
        if (verify_degree(s) != s.size() - 1)
            throw std::invalid_argument("dedup_canonical: non-ideal input");
    }

    // group by affine equivalence inside class-invariant buckets
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < unique.size(); ++i)
        buckets[class_bucket_key(unique[i])].push_back(i);

    std::vector<size_t> group(unique.size());
    for (size_t i = 0; i < unique.size(); ++i) group[i] = i;
    std::function<size_t(size_t)> find = [&](size_t v) {
        while (group[v] != v) v = group[v] = group[group[v]];
        return v;
    };
    for (const auto& [key, members] : buckets) {
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                size_t ra = find(members[a]), rb = find(members[b]);
                if (ra == rb) continue;
                if (equivalent(unique[members[a]], unique[members[b]]).has_value())
                    group[rb] = ra;
            }
    }

    std::map<size_t, std::vector<size_t>> classes;
    for (size_t i = 0; i < unique.size(); ++i) classes[find(i)].push_back(i);

    struct Rep {
        std::string key;
        size_t index;
    };
    std::vector<Rep> reps;
    for (const auto& [root, members] : classes) {
        size_t best = members.front();
        std::string best_key = translated_key(unique[best]) + "|" + emit_solution(unique[best]);
        for (size_t m : members) {
            std::string key = translated_key(unique[m]) + "|" + emit_solution(unique[m]);
            if (key < best_key) {
                best = m;
                best_key = key;
            }
        }
        reps.push_back({best_key, best});
    }
    std::sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) { return a.key < b.key; });

    std::vector<DedupEntry> out;
    for (const auto& r : reps) out.push_back({unique[r.index], std::nullopt});
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].conjugate_of.has_value()) continue;
        PteSolution conj = conjugate_solution(out[i].solution);
        for (size_t j = i + 1; j < out.size(); ++j) {
            if (out[j].conjugate_of.has_value()) continue;
            if (out[j].solution.size() != conj.size()) continue;
            if (equivalent(conj, out[j].solution).has_value()) {
                out[i].conjugate_of = j;
                out[j].conjugate_of = i;
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// checkpointing and the run driver

std::optional<Checkpoint> Checkpoint::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("fingerprint=", 0) == 0) {
            cp.fingerprint = line.substr(12);
        } else if (line.rfind("done=", 0) == 0) {
            cp.done.push_back(std::stoi(line.substr(5)));
        } else if (!line.empty()) {
            throw std::runtime_error("checkpoint: bad line '" + line + "'");
        }
    }
    std::sort(cp.done.begin(), cp.done.end());
    return cp;
}

void Checkpoint::save_atomic(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << "fingerprint=" << fingerprint << "\n";
        for (int id : done) out << "done=" << id << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: rename failed for " + path);
}

namespace {

int worker_count(const SearchConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("PTE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

}  // namespace

RunResult run(const SearchConfig& cfg, const std::function<bool()>& cancel) {
    cfg.validate();
    if (cfg.out_path.empty()) throw std::invalid_argument("run: output path required");

    for (const auto& q : cfg.sieve) {
        if (lower_bound(cfg.n).lower.exponent_of(q) == 0)
            std::cerr << "warning: sieve prime " << q.to_string()
                      << " does not divide the engine lower bound for size " << cfg.n
                      << "; completeness is no longer guaranteed\n";
    }

    auto chunks = plan_chunks(cfg);
    Checkpoint cp;
    cp.fingerprint = cfg.fingerprint();
    bool resumed = false;
    if (!cfg.checkpoint_path.empty()) {
        if (auto existing = Checkpoint::load(cfg.checkpoint_path)) {
            if (existing->fingerprint != cp.fingerprint)
                throw std::runtime_error("checkpoint fingerprint mismatch: refusing to resume");
            cp = *existing;
            resumed = true;
        }
    }
    if (!resumed) {
        std::ofstream(cfg.out_path, std::ios::trunc);
        if (!cfg.checkpoint_path.empty()) cp.save_atomic(cfg.checkpoint_path);
    }

    std::vector<Chunk> pending;
    for (const auto& c : chunks)
        if (!std::binary_search(cp.done.begin(), cp.done.end(), c.id)) pending.push_back(c);

    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex collector;
    RunResult result;

    auto worker = [&]() {
        for (;;) {
            if (stop.load()) return;
            if (cancel && cancel()) {
                stop.store(true);
                return;
            }
            size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            const Chunk& chunk = pending[i];
            std::vector<PteSolution> found;
            ChunkStats stats = search_chunk(cfg, chunk,
                                            [&](const PteSolution& s) { found.push_back(s); });
            std::lock_guard<std::mutex> lock(collector);
            {
                std::ofstream out(cfg.out_path, std::ios::app);
                for (const auto& s : found) out << emit_solution(s) << "\n";
            }
            cp.done.push_back(chunk.id);
            std::sort(cp.done.begin(), cp.done.end());
            if (!cfg.checkpoint_path.empty()) cp.save_atomic(cfg.checkpoint_path);
            result.raw_found += (long long)found.size();
            result.budget_rejections += stats.budget_rejections;
        }
    };

    int W = std::min(worker_count(cfg), (int)std::max<size_t>(pending.size(), 1));
    std::vector<std::thread> threads;
    for (int i = 0; i < W; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    if (stop.load() || cp.done.size() != chunks.size()) {
        result.completed = false;
        return result;
    }

    // final pass: canonical deduplicated rewrite
    std::vector<PteSolution> all;
    {
        std::ifstream in(cfg.out_path);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                PteSolution s = parse_solution_line(line);
                if (verify_degree(s) != s.size() - 1)
                    throw std::invalid_argument("not ideal");
                all.push_back(std::move(s));
            } catch (const std::invalid_argument& e) {
                std::cerr << "warning: dropping unusable result line " << lineno << ": "
                          << e.what() << "\n";
            }
        }
    }
    result.dedup = dedup_canonical(all);
    {
        std::vector<PteSolution> reps;
        for (const auto& e : result.dedup) reps.push_back(e.solution);
        std::string tmp = cfg.out_path + ".tmp";
        std::ofstream out(tmp, std::ios::trunc);
        out << emit_solutions(reps);
        out.close();
        if (std::rename(tmp.c_str(), cfg.out_path.c_str()) != 0)
            throw std::runtime_error("run: final rename failed");
    }
    result.representatives = result.dedup.size();
    result.completed = true;
    return result;
}

}  // namespace pte
