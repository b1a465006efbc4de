#pragma once

#include <string>
#include <vector>

#include "pte/solution.hpp"

namespace pte {

enum class PrimeSplit { ramified, split, inert };

struct PrimeClass {
    BigInt p;
    PrimeSplit cls;
};

// Splitting type of a rational prime in the quadratic order of fundamental
// discriminant d_disc, by Kronecker symbol. Only -4 is used downstream, but
// the classification is exposed for general fundamental discriminants.
PrimeClass classify_rational_prime(const BigInt& p, long long d_disc);

// Canonical Gaussian primes above the rational prime p (1+i for 2, the two
// conjugates for p = 1 mod 4, p itself for p = 3 mod 4).
std::vector<GaussianInt> primes_above(long long p);

// All canonical primes with norm <= limit, sorted by (norm, re, -im).
std::vector<GaussianInt> gaussian_primes_up_to_norm(long long limit);

// Exponent guaranteed on each prime above p in the size-m constant by the
// consecutive-product argument: max(floor(m/p) - l, 0) where l is the exact
// valuation of m at the prime. p must be ramified or split (inert rejected).
int rule_consecutive(int m, long long p);

// When m itself is the norm of a prime and exceeds 3, every prime of norm m
// divides the size-m constant: the split conjugate pair once each, or the
// inert prime squared.
std::vector<std::pair<GaussianInt, int>> rule_norm_prime(int m);

// Primes q with n+3 <= N(q) < n+3 + (n-2)/6 for n = m-1 divide the size-m
// constant once. m >= 3.
std::vector<GaussianInt> rule_window(int m);

struct Provenance {
    GaussianInt prime;
    int exponent;
    std::string rule;  // consecutive | norm-prime | window | amplify | c5-special
};

// Power amplification on the ramified prime: once (1+i) divides the constant,
// its exponent rises to at least ceil(m/2); for m = 5 the special two-norm
// result forces at least (1+i)^4. Never lowers an exponent; idempotent.
GFactorization amplify(int m, const GFactorization& base,
                       std::vector<Provenance>* provenance = nullptr);

struct BoundEntry {
    int n = 0;
    GFactorization lower;
    std::vector<Provenance> provenance;
};

// Factored lower bound for the size-m constant: per-prime maximum of the
// three rules, then amplification. m >= 2.
BoundEntry lower_bound(int m);

// gcd of the constants of ideal solutions of one size, canonical form.
GFactorization corpus_gcd_upper_bound(const std::vector<PteSolution>& solutions);

}  // namespace pte
