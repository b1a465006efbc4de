#include "pte/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pte {

namespace {

bool squarefree_small(long long v) {
    v = v < 0 ? -v : v;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % (d * d) == 0) return false;
        while (v % d == 0) v /= d;
    }
    return true;
}

bool is_fundamental_discriminant(long long d) {
    if (d == 1 || d == 0) return false;
    long long mod4 = ((d % 4) + 4) % 4;
    if (mod4 == 1) return squarefree_small(d);
    if (mod4 == 0) {
        long long m = d / 4;
        long long m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && squarefree_small(m);
    }
    return false;
}

long long powmod_ll(long long a, long long e, long long m) {
    __int128 r = 1, b = ((a % m) + m) % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return (long long)r;
}

}  // namespace

PrimeClass classify_rational_prime(const BigInt& p, long long d_disc) {
    if (!is_fundamental_discriminant(d_disc))
        throw std::invalid_argument("classify_rational_prime: " + std::to_string(d_disc) +
                                    " is not a fundamental discriminant");
    if (p.sign() <= 0 || !p.is_probab_prime())
        throw std::invalid_argument("classify_rational_prime: p must be a positive prime");
    if (BigInt(d_disc).divisible_by(p)) return {p, PrimeSplit::ramified};
    if (p == BigInt(2)) {
        long long r8 = ((d_disc % 8) + 8) % 8;
        return {p, (r8 == 1 || r8 == 7) ? PrimeSplit::split : PrimeSplit::inert};
    }
    if (!p.fits_ll())
        throw std::invalid_argument("classify_rational_prime: prime too large");
    long long pv = p.to_ll();
    long long legendre = powmod_ll(((d_disc % pv) + pv) % pv, (pv - 1) / 2, pv);
    return {p, legendre == 1 ? PrimeSplit::split : PrimeSplit::inert};
}

std::vector<GaussianInt> primes_above(long long p) {
    if (p == 2) return {GaussianInt(1, 1)};
    if (((p % 4) + 4) % 4 == 3) return {GaussianInt(p, 0)};
    GFactorization f = factor(GaussianInt(p, 0));
    if (f.factors.size() != 2) throw std::logic_error("primes_above: expected a split prime");
    return {f.factors[0].first, f.factors[1].first};
}

std::vector<GaussianInt> gaussian_primes_up_to_norm(long long limit) {
    if (limit < 2) throw std::invalid_argument("gaussian_primes_up_to_norm: limit must be >= 2");
    std::vector<GaussianInt> out;
    std::vector<bool> composite((size_t)limit + 1, false);
    for (long long p = 2; p <= limit; ++p) {
        if (composite[(size_t)p]) continue;
        for (long long q = p * p; q <= limit; q += p) composite[(size_t)q] = true;
        if (p == 2 || p % 4 == 1) {
            for (const auto& pi : primes_above(p)) out.push_back(pi);
        } else if (p * p <= limit) {
            out.push_back(GaussianInt(p, 0));
        }
    }
    std::sort(out.begin(), out.end(), gauss_less);
    return out;
}

int rule_consecutive(int m, long long p) {
    if (m < 2) throw std::invalid_argument("rule_consecutive: m must be >= 2");
    bool ramified = (p == 2), split = (p % 4 == 1);
    if (!ramified && !split)
        throw std::invalid_argument("rule_consecutive: p must be ramified or split, got " +
                                    std::to_string(p));
    const GaussianInt pi = primes_above(p).front();
    long long s = m / p;
    int l = 0;
    GaussianInt rest(m, 0);
    for (;;) {
        GaussianInt q;
        if (!divides(pi, rest, &q)) break;
        rest = q;
        ++l;
    }
    return (int)std::max<long long>(s - l, 0);
}

std::vector<std::pair<GaussianInt, int>> rule_norm_prime(int m) {
    std::vector<std::pair<GaussianInt, int>> out;
    if (m <= 3) return out;
    if (BigInt(m).is_probab_prime() && m % 4 == 1) {
        for (const auto& pi : primes_above(m)) out.emplace_back(pi, 1);
    } else if (BigInt(m).is_perfect_square()) {
        long long r = BigInt(m).isqrt().to_ll();
        if (BigInt(r).is_probab_prime() && r % 4 == 3)
            out.emplace_back(GaussianInt(r, 0), 2);
    }
    return out;
}

std::vector<GaussianInt> rule_window(int m) {
    if (m < 3) throw std::invalid_argument("rule_window: m must be >= 3");
    const long long n = m - 1;
    std::vector<GaussianInt> out;
    // n+3 <= N(q) < n+3 + (n-2)/6, compared as 6*N(q) < 7n + 16
    long long lo = n + 3;
    long long hi_num = 7 * n + 16;
    for (const auto& q : gaussian_primes_up_to_norm(std::max<long long>(lo + (n - 2) / 6 + 1, 2))) {
        BigInt nq = q.norm();
        if (!nq.fits_ll()) continue;
        long long v = nq.to_ll();
        if (v >= lo && 6 * v < hi_num) out.push_back(q);
    }
    return out;
}

GFactorization amplify(int m, const GFactorization& base, std::vector<Provenance>* provenance) {
    GFactorization out = base;
    out.unit = GaussianInt(1, 0);
    const GaussianInt ramified(1, 1);
    int e = out.exponent_of(ramified);
    if (e > 0) {
        int target = (m + 1) / 2;  // ceil(m/2)
        if (target > e) {
            gfact_set_max(out, ramified, target);
            if (provenance) provenance->push_back({ramified, target, "amplify"});
            e = target;
        }
        if (m == 5 && e < 4) {
            gfact_set_max(out, ramified, 4);
            if (provenance) provenance->push_back({ramified, 4, "c5-special"});
        }
    }
    return out;
}

namespace {

BoundEntry compute_lower_bound(int m) {
    BoundEntry entry;
    entry.n = m;
    GFactorization acc;

    auto record = [&](const GaussianInt& prime, int exponent, const char* rule) {
        if (exponent <= 0) return;
        gfact_set_max(acc, prime, exponent);
        entry.provenance.push_back({prime, exponent, rule});
    };

    for (long long p = 2; p <= m; p = (p == 2 ? 5 : p + 4)) {
        if (!BigInt(p).is_probab_prime()) continue;
        int e = rule_consecutive(m, p);
        for (const auto& pi : primes_above(p)) record(pi, e, "consecutive");
    }
    for (const auto& [pi, e] : rule_norm_prime(m)) record(pi, e, "norm-prime");
    if (m >= 3)
        for (const auto& pi : rule_window(m)) record(pi, 1, "window");

    entry.lower = amplify(m, acc, &entry.provenance);
    return entry;
}

}  // namespace

BoundEntry lower_bound(int m) {
    if (m < 2) throw std::invalid_argument("lower_bound: m must be >= 2");
    static std::map<int, BoundEntry> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, compute_lower_bound(m)).first;
    return it->second;
}

GFactorization corpus_gcd_upper_bound(const std::vector<PteSolution>& solutions) {
    if (solutions.empty())
        throw std::invalid_argument("corpus_gcd_upper_bound: empty solution list");
    const int n = solutions.front().size();
    bool first = true;
    GFactorization acc;
    for (const auto& s : solutions) {
        if (s.size() != n)
            throw std::invalid_argument("corpus_gcd_upper_bound: mixed sizes in corpus");
        GFactorization f = factor(constant(s));
        f.unit = GaussianInt(1, 0);
        acc = first ? f : gfact_gcd(acc, f);
        first = false;
    }
    return acc;
}

}  // namespace pte
