#pragma once

#include <optional>
#include <vector>

#include "pte/symfunc.hpp"

namespace pte {

// Affine map z -> m*z + k over Q(i); m != 0.
struct AffineMap {
    GaussianRational m{1, 0};
    GaussianRational k{0, 0};

    AffineMap() = default;
    AffineMap(GaussianRational m_, GaussianRational k_);

    GaussianRational apply(const GaussianRational& z) const { return m * z + k; }
    AffineMap compose(const AffineMap& inner) const;  // this(inner(z))
    AffineMap inverse() const;
};

// Two size-n multisets with a claimed degree 1 <= k <= n-1. Elements are kept
// in canonical sorted order; the multisets must differ.
class PteSolution {
  public:
    PteSolution(std::vector<GaussianInt> x, std::vector<GaussianInt> y, int claimed_degree);
    static PteSolution claiming_ideal(std::vector<GaussianInt> x, std::vector<GaussianInt> y);

    int size() const { return (int)x_.size(); }
    int claimed_degree() const { return claimed_degree_; }
    const std::vector<GaussianInt>& x() const { return x_; }
    const std::vector<GaussianInt>& y() const { return y_; }

    friend bool operator==(const PteSolution& a, const PteSolution& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.claimed_degree_ == b.claimed_degree_;
    }

  private:
    std::vector<GaussianInt> x_, y_;
    int claimed_degree_;
};

// Largest j such that the power sums of x and y agree for 1..j (0 when they
// already differ at j = 1). Ideal means verify_degree == size - 1.
int verify_degree(const PteSolution& s);
inline bool is_ideal(const PteSolution& s) { return verify_degree(s) == s.size() - 1; }

// The constant prod(z - x_i) - prod(z - y_i) of an ideal solution; rejects
// non-ideal input.
GaussianInt constant(const PteSolution& s);

// True iff the falling-factorial sums of x and y agree for all orders 1..k.
bool falling_factorial_check(const PteSolution& s, int k);

// Element-wise m*z + k on both sides; every image must stay in Z[i].
PteSolution affine_apply(const PteSolution& s, const AffineMap& f);

PteSolution conjugate_solution(const PteSolution& s);

// Constructive affine-equivalence test for two ideal solutions of equal size.
// Returns a witnessing map (possibly pairing a.x onto b.y) or nullopt.
std::optional<AffineMap> equivalent(const PteSolution& a, const PteSolution& b);

// True iff the residue multisets of x and y modulo the prime q coincide.
bool pairing_mod_q(const PteSolution& s, const GaussianInt& q);

// True iff M^n = value has a solution M in Q(i).
bool is_nth_power_in_qi(const GaussianRational& value, int n);

}  // namespace pte
