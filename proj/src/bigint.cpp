#include "pte/bigint.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace pte {

namespace {
constexpr long long kSmallMax = LLONG_MAX / 2;
constexpr long long kSmallMin = LLONG_MIN / 2 + 1;

bool small_ok(long long v) { return v >= kSmallMin && v <= kSmallMax; }
}  // namespace

mpz_ptr BigInt::new_mpz() {
    mpz_ptr p = new __mpz_struct;
    mpz_init(p);
    return p;
}

mpz_ptr BigInt::clone_mpz(mpz_srcptr src) {
    mpz_ptr p = new __mpz_struct;
    mpz_init_set(p, src);
    return p;
}

mpz_srcptr BigInt::view(mpz_t scratch) const {
    if (z_) return z_;
    mpz_init_set_si(scratch, v_);
    return scratch;
}

BigInt BigInt::take(mpz_ptr z) {
    BigInt r;
    if (mpz_fits_slong_p(z)) {
        long long v = mpz_get_si(z);
        if (small_ok(v)) {
            r.v_ = v;
            mpz_clear(z);
            delete z;
            return r;
        }
    }
    r.z_ = z;
    return r;
}

void BigInt::demote() {
    if (z_ && mpz_fits_slong_p(z_)) {
        long long v = mpz_get_si(z_);
        if (small_ok(v)) {
            release();
            v_ = v;
        }
    }
}

BigInt::BigInt(std::string_view decimal) : v_(0), z_(nullptr) {
    if (!decimal.empty() && decimal.front() == '+') decimal.remove_prefix(1);
    std::string s(decimal);
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    mpz_ptr p = new_mpz();
    if (mpz_set_str(p, s.c_str(), 10) != 0) {
        mpz_clear(p);
        delete p;
        throw std::invalid_argument("BigInt: bad decimal string '" + s + "'");
    }
    *this = take(p);
}

bool BigInt::fits_ll() const {
    if (!z_) return true;
    return mpz_fits_slong_p(z_) != 0;
}

long long BigInt::to_ll() const {
    if (!z_) return v_;
    if (!mpz_fits_slong_p(z_)) throw std::overflow_error("BigInt::to_ll");
    return mpz_get_si(z_);
}

BigInt BigInt::operator-() const {
    if (!z_) return BigInt(-v_);  // |v_| <= kSmallMax so no overflow
    mpz_ptr p = new_mpz();
    mpz_neg(p, z_);
    return take(p);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) {
        long long r;
        if (!__builtin_add_overflow(a.v_, b.v_, &r)) return BigInt(r);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = BigInt::new_mpz();
    mpz_add(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return BigInt::take(p);
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) {
        long long r;
        if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return BigInt(r);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = BigInt::new_mpz();
    mpz_sub(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return BigInt::take(p);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) {
        long long r;
        if (!__builtin_mul_overflow(a.v_, b.v_, &r) && small_ok(r)) return BigInt(r);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = BigInt::new_mpz();
    mpz_mul(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return BigInt::take(p);
}

void BigInt::tdiv_qr(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (!a.z_ && !b.z_) {
        q = BigInt(a.v_ / b.v_);
        r = BigInt(a.v_ % b.v_);
        return;
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr pq = new_mpz(), pr = new_mpz();
    mpz_tdiv_qr(pq, pr, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    q = take(pq);
    r = take(pr);
}

BigInt BigInt::fdiv_q(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (!a.z_ && !b.z_) {
        long long q = a.v_ / b.v_, r = a.v_ % b.v_;
        if (r != 0 && ((r < 0) != (b.v_ < 0))) --q;
        return BigInt(q);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = new_mpz();
    mpz_fdiv_q(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return take(p);
}

BigInt BigInt::cdiv_q(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (!a.z_ && !b.z_) {
        long long q = a.v_ / b.v_, r = a.v_ % b.v_;
        if (r != 0 && ((r < 0) == (b.v_ < 0))) ++q;
        return BigInt(q);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = new_mpz();
    mpz_cdiv_q(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return take(p);
}

std::optional<BigInt> BigInt::divide_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    tdiv_qr(a, b, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

bool BigInt::divisible_by(const BigInt& b) const {
    BigInt q, r;
    tdiv_qr(*this, b, q, r);
    return r.is_zero();
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) return (a.v_ > b.v_) - (a.v_ < b.v_);
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    int c = mpz_cmp(pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return (c > 0) - (c < 0);
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) {
        unsigned long long x = a.v_ < 0 ? -(unsigned long long)a.v_ : a.v_;
        unsigned long long y = b.v_ < 0 ? -(unsigned long long)b.v_ : b.v_;
        while (y) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        return BigInt((long long)x);
    }
    mpz_t sa, sb;
    mpz_srcptr pa = a.view(sa), pb = b.view(sb);
    mpz_ptr p = new_mpz();
    mpz_gcd(p, pa, pb);
    if (pa == sa) mpz_clear(sa);
    if (pb == sb) mpz_clear(sb);
    return take(p);
}

BigInt BigInt::pow(unsigned long e) const {
    mpz_t s;
    mpz_srcptr pa = view(s);
    mpz_ptr p = new_mpz();
    mpz_pow_ui(p, pa, e);
    if (pa == s) mpz_clear(s);
    return take(p);
}

BigInt BigInt::isqrt() const {
    if (sign() < 0) throw std::invalid_argument("BigInt::isqrt of negative");
    mpz_t s;
    mpz_srcptr pa = view(s);
    mpz_ptr p = new_mpz();
    mpz_sqrt(p, pa);
    if (pa == s) mpz_clear(s);
    return take(p);
}

bool BigInt::is_perfect_square() const {
    if (sign() < 0) return false;
    mpz_t s;
    mpz_srcptr pa = view(s);
    bool r = mpz_perfect_square_p(pa) != 0;
    if (pa == s) mpz_clear(s);
    return r;
}

bool BigInt::is_probab_prime() const {
    mpz_t s;
    mpz_srcptr pa = view(s);
    int r = mpz_probab_prime_p(pa, 40);
    if (pa == s) mpz_clear(s);
    return r != 0;
}

std::string BigInt::to_string() const {
    if (!z_) return std::to_string(v_);
    char* raw = mpz_get_str(nullptr, 10, z_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

size_t BigInt::bit_length() const {
    if (is_zero()) return 0;
    mpz_t s;
    mpz_srcptr pa = view(s);
    size_t n = mpz_sizeinbase(pa, 2);
    if (pa == s) mpz_clear(s);
    return n;
}

}  // namespace pte
