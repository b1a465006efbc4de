#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pte/gaussian.hpp"

namespace pte {

// Dense polynomial over Q(i); coeffs[k] is the z^k coefficient, trailing
// zeros trimmed, zero polynomial has an empty list. Evaluation is exact.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(GaussianRational v);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return (long)c_.size() - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& coeff(size_t k) const;
    const GaussianRational& leading() const;
    bool is_monic() const;
    bool has_integer_coeffs() const;

    GaussianRational eval(const GaussianRational& z) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const GaussianRational& s) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const;

  private:
    std::vector<GaussianRational> c_;
    void trim();
};

// Monic polynomial prod(z - r) over the multiset of roots; empty -> 1.
Polynomial poly_from_roots(const std::vector<GaussianInt>& roots);

// [p_1, ..., p_k_max] with p_k = sum of k-th powers; k_max >= 1.
std::vector<GaussianInt> power_sums(const std::vector<GaussianInt>& s, int k_max);

// Newton's identities: elementary symmetric values [e_1..e_n] from power sums
// [p_1..] (needs at least n of them), and the inverse direction.
std::vector<GaussianRational> elem_from_power(const std::vector<GaussianRational>& p, int n);
std::vector<GaussianRational> power_from_elem(const std::vector<GaussianRational>& e, int k_max);

inline std::vector<GaussianRational> to_rational(const std::vector<GaussianInt>& v) {
    return {v.begin(), v.end()};
}

// Unique interpolating polynomial of degree <= points-1 through the given
// (abscissa, ordinate) pairs; duplicate abscissae rejected.
Polynomial lagrange_interpolate(
    const std::vector<std::pair<GaussianRational, GaussianRational>>& points);

struct root_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All roots lying in Z[i], with multiplicity, of a monic polynomial with
// Gaussian-integer coefficients. Found by stripping z^m for the zero root and
// then testing the unit expansion of each canonical divisor of the constant
// term. May return fewer than deg(p) roots. Throws root_budget_error when the
// constant term's norm exceeds 2^budget_bits.
std::vector<std::pair<GaussianInt, int>> gaussian_roots(const Polynomial& p,
                                                        unsigned budget_bits = 128);

// Integer-coefficient fast path used by the search inner loop.
std::vector<std::pair<GaussianInt, int>> gaussian_roots_int(std::vector<GaussianInt> coeffs,
                                                            unsigned budget_bits = 128);

// Synthetic division of integer coefficients by (z - r); returns false (and
// leaves `coeffs` untouched) unless the division is exact.
bool divide_linear_exact(std::vector<GaussianInt>& coeffs, const GaussianInt& r);

}  // namespace pte
