#include "pte/solution.hpp"

#include <algorithm>
#include <numeric>

namespace pte {

AffineMap::AffineMap(GaussianRational m_, GaussianRational k_)
    : m(std::move(m_)), k(std::move(k_)) {
    if (m.is_zero()) throw std::invalid_argument("AffineMap: zero scale");
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    return AffineMap(m * inner.m, m * inner.k + k);
}

AffineMap AffineMap::inverse() const {
    GaussianRational minv = m.inverse();
    return AffineMap(minv, -(minv * k));
}

PteSolution::PteSolution(std::vector<GaussianInt> x, std::vector<GaussianInt> y,
                         int claimed_degree)
    : x_(std::move(x)), y_(std::move(y)), claimed_degree_(claimed_degree) {
    if (x_.empty() || x_.size() != y_.size())
        throw std::invalid_argument("PteSolution: multisets must be nonempty and equal-sized");
    if (claimed_degree_ < 1 || claimed_degree_ > (int)x_.size() - 1)
        throw std::invalid_argument("PteSolution: claimed degree out of range");
    std::sort(x_.begin(), x_.end(), gauss_less);
    std::sort(y_.begin(), y_.end(), gauss_less);
    if (x_ == y_) throw std::invalid_argument("PteSolution: multisets must be distinct");
}

PteSolution PteSolution::claiming_ideal(std::vector<GaussianInt> x, std::vector<GaussianInt> y) {
    int n = (int)x.size();
    return PteSolution(std::move(x), std::move(y), n - 1);
}

int verify_degree(const PteSolution& s) {
    const int n = s.size();
    const int kmax = n > 1 ? n - 1 : 1;
    auto px = power_sums(s.x(), kmax);
    auto py = power_sums(s.y(), kmax);
    int d = 0;
    while (d < n - 1 && px[(size_t)d] == py[(size_t)d]) ++d;
    return d;
}

GaussianInt constant(const PteSolution& s) {
    if (!is_ideal(s)) throw std::invalid_argument("constant: solution is not ideal");
    Polynomial diff = poly_from_roots(s.x()) - poly_from_roots(s.y());
    if (diff.degree() > 0) throw std::logic_error("constant: non-constant difference");
    if (diff.is_zero()) throw std::logic_error("constant: zero difference");
    return diff.coeff(0).as_integer();
}

bool falling_factorial_check(const PteSolution& s, int k) {
    if (k < 1 || k > s.size() - 1)
        throw std::invalid_argument("falling_factorial_check: k out of range");
    for (int m = 1; m <= k; ++m) {
        GaussianInt sx{0, 0}, sy{0, 0};
        auto fall = [&](const GaussianInt& v) {
            GaussianInt acc{1, 0};
            for (int j = 0; j < m; ++j) acc = acc * (v - GaussianInt(j, 0));
            return acc;
        };
        for (const auto& v : s.x()) sx += fall(v);
        for (const auto& v : s.y()) sy += fall(v);
        if (!(sx == sy)) return false;
    }
    return true;
}

PteSolution affine_apply(const PteSolution& s, const AffineMap& f) {
    auto map_all = [&](const std::vector<GaussianInt>& v) {
        std::vector<GaussianInt> out;
        out.reserve(v.size());
        for (const auto& z : v) {
            GaussianRational img = f.apply(GaussianRational(z));
            if (!img.is_integer())
                throw std::invalid_argument("affine_apply: image " + img.to_string() +
                                            " is not a Gaussian integer");
            out.push_back(img.as_integer());
        }
        return out;
    };
    return PteSolution(map_all(s.x()), map_all(s.y()), s.claimed_degree());
}

PteSolution conjugate_solution(const PteSolution& s) {
    auto conj_all = [](const std::vector<GaussianInt>& v) {
        std::vector<GaussianInt> out;
        out.reserve(v.size());
        for (const auto& z : v) out.push_back(z.conj());
        return out;
    };
    return PteSolution(conj_all(s.x()), conj_all(s.y()), s.claimed_degree());
}

bool is_nth_power_in_qi(const GaussianRational& value, int n) {
    if (n < 1) throw std::invalid_argument("is_nth_power_in_qi: n must be positive");
    if (value.is_zero()) return false;
    GFactorization fn = factor(value.num);
    int unit_t = unit_exponent(fn.unit);
    std::vector<std::pair<GaussianInt, long>> net;
    for (const auto& [p, e] : fn.factors) net.emplace_back(p, (long)e);
    if (!value.den.is_one()) {
        GFactorization fd = factor(GaussianInt(value.den, BigInt(0)));
        unit_t = ((unit_t - unit_exponent(fd.unit)) % 4 + 4) % 4;
        for (const auto& [p, e] : fd.factors) {
            bool merged = false;
            for (auto& [q, v] : net)
                if (q == p) {
                    v -= e;
                    merged = true;
                }
            if (!merged) net.emplace_back(p, -(long)e);
        }
    }
    for (const auto& [p, e] : net)
        if (e % n != 0) return false;
    // units have 4th-power periodicity: i^t = (i^s)^n is solvable iff gcd(n,4) | t
    return unit_t % std::gcd(n, 4) == 0;
}

namespace {

GaussianRational centroid(const std::vector<GaussianInt>& v) {
    GaussianInt sum{0, 0};
    for (const auto& z : v) sum += z;
    return GaussianRational(sum, BigInt((long long)v.size()));
}

std::vector<GaussianRational> centered(const std::vector<GaussianInt>& v,
                                       const GaussianRational& c) {
    std::vector<GaussianRational> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(GaussianRational(z) - c);
    return out;
}

std::vector<GaussianRational> scaled_sorted(const std::vector<GaussianRational>& v,
                                            const GaussianRational& m) {
    std::vector<GaussianRational> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z * m);
    std::sort(out.begin(), out.end(),
              [](const GaussianRational& a, const GaussianRational& b) {
                  return cmp_grat(a, b) < 0;
              });
    return out;
}

const GaussianRational* first_nonzero(const std::vector<GaussianRational>& v) {
    for (const auto& z : v)
        if (!z.is_zero()) return &z;
    return nullptr;
}

}  // namespace

std::optional<AffineMap> equivalent(const PteSolution& a, const PteSolution& b) {
    if (a.size() != b.size()) throw std::invalid_argument("equivalent: sizes differ");
    if (!is_ideal(a) || !is_ideal(b))
        throw std::invalid_argument("equivalent: both solutions must be ideal");
    const int n = a.size();

    GaussianRational ratio = GaussianRational(constant(b)) / GaussianRational(constant(a));
    if (!is_nth_power_in_qi(ratio, n)) return std::nullopt;

    const GaussianRational ca = centroid(a.x()), cb = centroid(b.x());
    auto ax = centered(a.x(), ca), ay = centered(a.y(), ca);
    auto bx = centered(b.x(), cb), by = centered(b.y(), cb);

    bool ref_is_x = true;
    const GaussianRational* alpha = first_nonzero(ax);
    if (!alpha) {
        alpha = first_nonzero(ay);
        ref_is_x = false;
    }
    if (!alpha) throw std::logic_error("equivalent: degenerate all-equal multisets");

    auto try_pairing = [&](const std::vector<GaussianRational>& bx_target,
                           const std::vector<GaussianRational>& by_target)
        -> std::optional<AffineMap> {
        const auto& beta_pool = ref_is_x ? bx_target : by_target;
        auto bxt = scaled_sorted(bx_target, GaussianRational(1, 0));
        auto byt = scaled_sorted(by_target, GaussianRational(1, 0));
        for (const auto& beta : beta_pool) {
            if (beta.is_zero()) continue;
            GaussianRational m = beta / *alpha;
            if (scaled_sorted(ax, m) == bxt && scaled_sorted(ay, m) == byt)
                return AffineMap(m, cb - m * ca);
        }
        return std::nullopt;
    };

    if (auto f = try_pairing(bx, by)) return f;  // f(a.x) = b.x
    if (auto f = try_pairing(by, bx)) return f;  // f(a.x) = b.y
    return std::nullopt;
}

bool pairing_mod_q(const PteSolution& s, const GaussianInt& q) {
    if (q.is_zero() || q.is_unit()) throw std::invalid_argument("pairing_mod_q: q must be prime");
    BigInt nq = q.norm();
    bool prime_norm = nq.is_probab_prime();
    bool inert = false;
    if (!prime_norm && nq.is_perfect_square()) {
        BigInt p = nq.isqrt(), qq, r;
        BigInt::tdiv_qr(p, BigInt(4), qq, r);
        inert = p.is_probab_prime() && r == BigInt(3);
    }
    if (!prime_norm && !inert)
        throw std::invalid_argument("pairing_mod_q: q is not prime: " + q.to_string());
    if (!is_ideal(s)) throw std::invalid_argument("pairing_mod_q: solution must be ideal");

    auto residues = [&](const std::vector<GaussianInt>& v) {
        std::vector<GaussianInt> out;
        out.reserve(v.size());
        for (const auto& z : v) out.push_back(divrem(z, q).r);
        std::sort(out.begin(), out.end(), gauss_less);
        return out;
    };
    return residues(s.x()) == residues(s.y());
}

}  // namespace pte
