#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pte {

// Arbitrary-precision signed integer with a small-value fast path.
//
// Dual representation: when `z_` is null the value lives in `v_` (no heap
// traffic); otherwise it lives in the mpz. Results are demoted back to the
// small form whenever they fit, so search inner loops stay allocation-free.
class BigInt {
  public:
    BigInt() noexcept : v_(0), z_(nullptr) {}
    BigInt(long long v) noexcept : v_(v), z_(nullptr) {}
    BigInt(int v) noexcept : v_(v), z_(nullptr) {}

    explicit BigInt(std::string_view decimal);

    BigInt(const BigInt& o) : v_(o.v_), z_(nullptr) {
        if (o.z_) z_ = clone_mpz(o.z_);
    }
    BigInt(BigInt&& o) noexcept : v_(o.v_), z_(o.z_) { o.z_ = nullptr; }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) {
            release();
            v_ = o.v_;
            z_ = o.z_ ? clone_mpz(o.z_) : nullptr;
        }
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        if (this != &o) {
            release();
            v_ = o.v_;
            z_ = o.z_;
            o.z_ = nullptr;
        }
        return *this;
    }
    ~BigInt() { release(); }

    bool is_zero() const { return z_ ? mpz_sgn(z_) == 0 : v_ == 0; }
    bool is_one() const { return z_ ? mpz_cmp_si(z_, 1) == 0 : v_ == 1; }
    // -1, 0, +1
    int sign() const { return z_ ? mpz_sgn(z_) : (v_ > 0) - (v_ < 0); }
    bool is_odd() const { return z_ ? mpz_odd_p(z_) : (v_ & 1); }

    bool fits_ll() const;
    long long to_ll() const;  // throws std::overflow_error unless fits_ll()

    BigInt operator-() const;
    BigInt abs() const { return sign() < 0 ? -*this : *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (C semantics). b must be nonzero.
    static void tdiv_qr(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // Floor and ceiling quotients.
    static BigInt fdiv_q(const BigInt& a, const BigInt& b);
    static BigInt cdiv_q(const BigInt& a, const BigInt& b);
    // Quotient when b divides a exactly, std::nullopt otherwise.
    static std::optional<BigInt> divide_exact(const BigInt& a, const BigInt& b);
    bool divisible_by(const BigInt& b) const;

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    BigInt pow(unsigned long e) const;

    // Floor square root of a nonnegative value.
    BigInt isqrt() const;
    bool is_perfect_square() const;
    // GMP probabilistic primality (exact for the 64-bit range we factor in).
    bool is_probab_prime() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

    // Number of bits in |x|; 0 for x == 0.
    size_t bit_length() const;

  private:
    long long v_;
    mpz_ptr z_;

    static mpz_ptr new_mpz();
    static mpz_ptr clone_mpz(mpz_srcptr src);
    void release() {
        if (z_) {
            mpz_clear(z_);
            delete z_;
            z_ = nullptr;
        }
    }
    // Read-only view as mpz; `scratch` provides storage for small values.
    mpz_srcptr view(mpz_t scratch) const;
    static BigInt take(mpz_ptr z);  // assumes ownership, demotes if small
    void demote();
};

}  // namespace pte
