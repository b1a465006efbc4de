#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pte/bigint.hpp"

namespace pte {

// Element of Z[i]. All arithmetic is exact; values are immutable in spirit
// (operations return fresh values) so they can be shared across threads.
struct GaussianInt {
    BigInt re, im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_unit() const;

    GaussianInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }
    GaussianInt& operator-=(const GaussianInt& o) { return *this = *this - o; }
    GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    std::string to_string() const;  // "(re,im)"
};

// Deterministic total order: by (norm, re) ascending, then im descending.
// The im-descending tiebreak puts (2,1) ahead of (2,-1), matching the
// conventional conjugate-pair display order used throughout the tool.
int cmp_gauss(const GaussianInt& a, const GaussianInt& b);
inline bool gauss_less(const GaussianInt& a, const GaussianInt& b) {
    return cmp_gauss(a, b) < 0;
}

// The four units as i^t.
GaussianInt unit_pow_i(int t);
// For a unit value, its exponent t with u = i^t; throws if not a unit.
int unit_exponent(const GaussianInt& u);

// norm(z) = re^2 + im^2.
inline BigInt norm(const GaussianInt& z) { return z.norm(); }

// Euclidean division: a = q*b + r with norm(r) < norm(b). The quotient is the
// nearest lattice point of a/b, coordinate ties rounding toward -infinity.
struct GDivRem {
    GaussianInt q, r;
};
GDivRem divrem(const GaussianInt& a, const GaussianInt& b);

// True iff b | a exactly; quotient returned through q when non-null.
bool divides(const GaussianInt& b, const GaussianInt& a, GaussianInt* q = nullptr);

// gcd normalized to the canonical associate; gcd(0,0) rejected.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

// The canonical associate c = u*z with re(c) > 0 and -re(c) < im(c) <= re(c).
struct CanonicalAssociate {
    GaussianInt value;
    GaussianInt unit;  // value = unit * input
};
CanonicalAssociate canonical_associate(const GaussianInt& z);
bool is_canonical(const GaussianInt& z);

// unit * prod(prime^exp) == original value; primes canonical, sorted,
// pairwise distinct.
struct GFactorization {
    GaussianInt unit{1, 0};
    std::vector<std::pair<GaussianInt, int>> factors;

    GaussianInt value() const;
    GaussianInt abs_value() const;  // product without the unit
    int exponent_of(const GaussianInt& canonical_prime) const;
    bool divides_into(const GFactorization& other) const;  // unit-free test
    std::string to_string() const;  // "(1,1)^4*(2,1)*(2,-1)", "1" when empty
};

struct factor_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact prime factorization in Z[i]; z != 0. Rational primes in norm(z) are
// lifted according to their splitting behavior (2 ramified, 1 mod 4 split,
// 3 mod 4 inert). Throws factor_budget_error when the norm has a composite
// cofactor beyond the trial-division/primality budget.
GFactorization factor(const GaussianInt& z);

// Merge-style helpers used by the divisibility-rules engine.
GFactorization gfact_one();
void gfact_set_max(GFactorization& f, const GaussianInt& canonical_prime, int exponent);
void gfact_mul_prime(GFactorization& f, const GaussianInt& canonical_prime, int exponent);
// gcd of two factorizations, per-prime min exponent (units dropped).
GFactorization gfact_gcd(const GFactorization& a, const GFactorization& b);

// Enumerates one canonical representative per associate class of each
// divisor: prod(e_i + 1) values. Callers expand by the four units.
void for_each_divisor(const GFactorization& f, const std::function<void(const GaussianInt&)>& fn);
std::vector<GaussianInt> divisors(const GFactorization& f);

// w with w^2 == z, if one exists in Z[i]; sqrt_exact(0) == 0.
std::optional<GaussianInt> sqrt_exact(const GaussianInt& z);

// Text form "(re,im)" with optional signs, no spaces. Throws on bad syntax.
GaussianInt parse_gaussian(std::string_view text);
// Parses a leading "(re,im)" from `text` starting at `pos`, advancing pos.
GaussianInt parse_gaussian_prefix(std::string_view text, size_t& pos);

// Exact element of Q(i): num / den with den > 0 and the integer content of
// (re(num), im(num), den) reduced to 1.
struct GaussianRational {
    GaussianInt num;
    BigInt den{1};

    GaussianRational() = default;
    GaussianRational(GaussianInt n) : num(std::move(n)) {}
    GaussianRational(long long r, long long i = 0) : num(r, i) {}
    GaussianRational(GaussianInt n, BigInt d);

    bool is_zero() const { return num.is_zero(); }
    bool is_integer() const { return den.is_one(); }
    const GaussianInt& as_integer() const;  // throws unless is_integer()

    GaussianRational conj() const { return GaussianRational(num.conj(), den); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational operator-() const { return GaussianRational(-num, den); }
    GaussianRational inverse() const;

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    std::string to_string() const;  // "(a,b)" or "(a,b)/d"

  private:
    void reduce();
};

int cmp_grat(const GaussianRational& a, const GaussianRational& b);

}  // namespace pte
