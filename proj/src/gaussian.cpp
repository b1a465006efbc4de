#include "pte/gaussian.hpp"

#include <algorithm>
#include <cctype>

namespace pte {

namespace {
constexpr long long kTrialDivisionBound = 1000000;
}

bool GaussianInt::is_unit() const { return norm().is_one(); }

std::string GaussianInt::to_string() const {
    return "(" + re.to_string() + "," + im.to_string() + ")";
}

int cmp_gauss(const GaussianInt& a, const GaussianInt& b) {
    int c = BigInt::cmp(a.norm(), b.norm());
    if (c) return c;
    c = BigInt::cmp(a.re, b.re);
    if (c) return c;
    return BigInt::cmp(b.im, a.im);
}

GaussianInt unit_pow_i(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

int unit_exponent(const GaussianInt& u) {
    for (int t = 0; t < 4; ++t)
        if (u == unit_pow_i(t)) return t;
    throw std::invalid_argument("unit_exponent: not a unit: " + u.to_string());
}

GDivRem divrem(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::invalid_argument("divrem: division by zero");
    const BigInt n = b.norm();
    const GaussianInt t = a * b.conj();
    const BigInt two(2), twon = two * n;
    // Nearest integer to x/n with ties toward -infinity: ceil((2x - n) / 2n).
    GaussianInt q{BigInt::cdiv_q(two * t.re - n, twon), BigInt::cdiv_q(two * t.im - n, twon)};
    GaussianInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

bool divides(const GaussianInt& b, const GaussianInt& a, GaussianInt* q) {
    if (b.is_zero()) return a.is_zero();
    GDivRem d = divrem(a, b);
    if (!d.r.is_zero()) return false;
    if (q) *q = std::move(d.q);
    return true;
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0,0)");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GDivRem d = divrem(x, y);
        x = std::move(y);
        y = std::move(d.r);
    }
    return canonical_associate(x).value;
}

bool is_canonical(const GaussianInt& z) {
    return z.re.sign() > 0 && BigInt::cmp(-z.re, z.im) < 0 && BigInt::cmp(z.im, z.re) <= 0;
}

CanonicalAssociate canonical_associate(const GaussianInt& z) {
    if (z.is_zero()) throw std::invalid_argument("canonical_associate(0)");
    GaussianInt c = z;
    for (int t = 0; t < 4; ++t) {
        if (is_canonical(c)) return {c, unit_pow_i(t)};
        c = c * GaussianInt(0, 1);
    }
    throw std::logic_error("canonical_associate: no associate in region");
}

GaussianInt GFactorization::value() const {
    GaussianInt v = unit;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) v = v * p;
    return v;
}

GaussianInt GFactorization::abs_value() const {
    GaussianInt v{1, 0};
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) v = v * p;
    return v;
}

int GFactorization::exponent_of(const GaussianInt& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

bool GFactorization::divides_into(const GFactorization& other) const {
    for (const auto& [p, e] : factors)
        if (other.exponent_of(p) < e) return false;
    return true;
}

std::string GFactorization::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty()) s += "*";
        s += p.to_string();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

GFactorization gfact_one() { return GFactorization{}; }

static void gfact_insert(GFactorization& f, const GaussianInt& p, int e, bool take_max) {
    if (e <= 0 && take_max) return;
    for (auto& [q, qe] : f.factors) {
        if (q == p) {
            qe = take_max ? std::max(qe, e) : qe + e;
            return;
        }
    }
    if (e > 0) {
        f.factors.emplace_back(p, e);
        std::sort(f.factors.begin(), f.factors.end(),
                  [](const auto& a, const auto& b) { return gauss_less(a.first, b.first); });
    }
}

void gfact_set_max(GFactorization& f, const GaussianInt& p, int e) { gfact_insert(f, p, e, true); }
void gfact_mul_prime(GFactorization& f, const GaussianInt& p, int e) {
    gfact_insert(f, p, e, false);
}

GFactorization gfact_gcd(const GFactorization& a, const GFactorization& b) {
    GFactorization g;
    for (const auto& [p, e] : a.factors) {
        int m = std::min(e, b.exponent_of(p));
        if (m > 0) gfact_mul_prime(g, p, m);
    }
    return g;
}

namespace {

// Rational factorization of a nonnegative BigInt: trial division below the
// fixed bound, then a primality check on the cofactor (a large prime or the
// square of a large inert prime is still acceptable).
std::vector<std::pair<BigInt, int>> factor_rational(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    if (n.is_one()) return out;
    auto strip = [&](const BigInt& p) {
        int e = 0;
        for (;;) {
            auto q = BigInt::divide_exact(n, p);
            if (!q) break;
            n = *q;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(BigInt(2));
    for (long long d = 3; d <= kTrialDivisionBound; d += 2) {
        BigInt dd(d);
        if (BigInt::cmp(dd * dd, n) > 0) break;
        strip(dd);
    }
    if (!n.is_one()) {
        if (n.is_probab_prime()) {
            out.emplace_back(n, 1);
        } else if (n.is_perfect_square() && n.isqrt().is_probab_prime()) {
            out.emplace_back(n.isqrt(), 2);
        } else {
            throw factor_budget_error("factor: cofactor " + n.to_string() +
                                      " exceeds factorization budget");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

unsigned long long mulmod_u64(unsigned long long a, unsigned long long b, unsigned long long m) {
    return (unsigned long long)((__uint128_t)a * b % m);
}

unsigned long long powmod_u64(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Square root of -1 modulo a prime p = 1 (mod 4).
unsigned long long sqrt_minus_one_mod(unsigned long long p) {
    for (unsigned long long a = 2;; ++a) {
        unsigned long long s = powmod_u64(a, (p - 1) / 2, p);
        if (s == p - 1) return powmod_u64(a, (p - 1) / 4, p);
    }
}

}  // namespace

GFactorization factor(const GaussianInt& z) {
    if (z.is_zero()) throw std::invalid_argument("factor(0)");
    GFactorization f;
    auto rational = factor_rational(z.norm());
    GaussianInt rest = z;
    for (const auto& [p, e] : rational) {
        if (p == BigInt(2)) {
            GaussianInt pi{1, 1};
            gfact_mul_prime(f, pi, e);
            for (int k = 0; k < e; ++k) {
                GaussianInt q;
                if (!divides(pi, rest, &q)) throw std::logic_error("factor: ramified lift failed");
                rest = q;
            }
            continue;
        }
        BigInt rem4q, rem4;
        BigInt::tdiv_qr(p, BigInt(4), rem4q, rem4);
        if (rem4 == BigInt(3)) {
            if (e % 2 != 0) throw std::logic_error("factor: odd inert exponent in norm");
            GaussianInt pi{p, BigInt(0)};
            gfact_mul_prime(f, pi, e / 2);
            for (int k = 0; k < e / 2; ++k) {
                GaussianInt q;
                if (!divides(pi, rest, &q)) throw std::logic_error("factor: inert lift failed");
                rest = q;
            }
            continue;
        }
        // split prime: p = pi * conj(pi) with pi = gcd(p, c + i), c^2 = -1 (mod p)
        if (!p.fits_ll())
            throw factor_budget_error("factor: split prime too large: " + p.to_string());
        unsigned long long pv = (unsigned long long)p.to_ll();
        unsigned long long c = sqrt_minus_one_mod(pv);
        GaussianInt pi = gcd(GaussianInt(p, BigInt(0)), GaussianInt(BigInt((long long)c), BigInt(1)));
        GaussianInt pibar = canonical_associate(pi.conj()).value;
        int v = 0;
        for (;;) {
            GaussianInt q;
            if (!divides(pi, rest, &q)) break;
            rest = q;
            ++v;
        }
        int w = e - v;
        for (int k = 0; k < w; ++k) {
            GaussianInt q;
            if (!divides(pibar, rest, &q)) throw std::logic_error("factor: split lift failed");
            rest = q;
        }
        if (v) gfact_mul_prime(f, pi, v);
        if (w) gfact_mul_prime(f, pibar, w);
    }
    if (!rest.is_unit()) throw std::logic_error("factor: non-unit residue " + rest.to_string());
    f.unit = rest;
    return f;
}

void for_each_divisor(const GFactorization& f,
                      const std::function<void(const GaussianInt&)>& fn) {
    const size_t k = f.factors.size();
    std::vector<std::vector<GaussianInt>> powers(k);
    for (size_t i = 0; i < k; ++i) {
        powers[i].push_back(GaussianInt{1, 0});
        for (int j = 0; j < f.factors[i].second; ++j)
            powers[i].push_back(powers[i].back() * f.factors[i].first);
    }
    std::vector<int> exps(k, 0);
    for (;;) {
        GaussianInt d{1, 0};
        for (size_t i = 0; i < k; ++i) d = d * powers[i][exps[i]];
        fn(canonical_associate(d).value);
        size_t i = 0;
        while (i < k && exps[i] == f.factors[i].second) exps[i++] = 0;
        if (i == k) return;
        ++exps[i];
    }
}

std::vector<GaussianInt> divisors(const GFactorization& f) {
    std::vector<GaussianInt> out;
    for_each_divisor(f, [&](const GaussianInt& d) { out.push_back(d); });
    std::sort(out.begin(), out.end(), gauss_less);
    return out;
}

std::optional<GaussianInt> sqrt_exact(const GaussianInt& z) {
    if (z.is_zero()) return GaussianInt{0, 0};
    GFactorization f = factor(z);
    GaussianInt w{1, 0};
    for (const auto& [p, e] : f.factors) {
        if (e % 2 != 0) return std::nullopt;
        for (int k = 0; k < e / 2; ++k) w = w * p;
    }
    for (int t = 0; t < 4; ++t) {
        GaussianInt cand = unit_pow_i(t) * w;
        if (cand * cand == z) return cand;
    }
    return std::nullopt;
}

GaussianInt parse_gaussian_prefix(std::string_view text, size_t& pos) {
    auto fail = [&]() -> GaussianInt {
        throw std::invalid_argument("bad gaussian literal in '" + std::string(text) + "'");
    };
    if (pos >= text.size() || text[pos] != '(') return fail();
    size_t comma = text.find(',', pos);
    size_t close = text.find(')', pos);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
        return fail();
    auto number = [&](std::string_view s) {
        if (s.empty()) fail();
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) fail();
        for (; i < s.size(); ++i)
            if (!std::isdigit((unsigned char)s[i])) fail();
        return BigInt(s);
    };
    BigInt re = number(text.substr(pos + 1, comma - pos - 1));
    BigInt im = number(text.substr(comma + 1, close - comma - 1));
    pos = close + 1;
    return {std::move(re), std::move(im)};
}

GaussianInt parse_gaussian(std::string_view text) {
    size_t pos = 0;
    GaussianInt z = parse_gaussian_prefix(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing text after gaussian literal");
    return z;
}

GaussianRational::GaussianRational(GaussianInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("GaussianRational: zero denominator");
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    reduce();
}

void GaussianRational::reduce() {
    if (num.is_zero()) {
        den = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(BigInt::gcd(num.re, num.im), den);
    if (!g.is_one()) {
        num.re = *BigInt::divide_exact(num.re, g);
        num.im = *BigInt::divide_exact(num.im, g);
        den = *BigInt::divide_exact(den, g);
    }
}

const GaussianInt& GaussianRational::as_integer() const {
    if (!is_integer()) throw std::invalid_argument("not a Gaussian integer: " + to_string());
    return num;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * GaussianInt(b.den, 0) + b.num * GaussianInt(a.den, 0),
                            a.den * b.den);
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * GaussianInt(b.den, 0) - b.num * GaussianInt(a.den, 0),
                            a.den * b.den);
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * b.num, a.den * b.den);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::invalid_argument("GaussianRational: inverse of zero");
    // 1 / (n/d) = d * conj(n) / norm(n)
    return GaussianRational(num.conj() * GaussianInt(den, 0), num.norm());
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
}

std::string GaussianRational::to_string() const {
    if (den.is_one()) return num.to_string();
    return num.to_string() + "/" + den.to_string();
}

int cmp_grat(const GaussianRational& a, const GaussianRational& b) {
    GaussianInt an = a.num * GaussianInt(b.den, 0);
    GaussianInt bn = b.num * GaussianInt(a.den, 0);
    return cmp_gauss(an, bn);
}

}  // namespace pte
