#include "pte/symfunc.hpp"

#include <algorithm>

namespace pte {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(GaussianRational v) {
    Polynomial p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

const GaussianRational& Polynomial::coeff(size_t k) const {
    static const GaussianRational zero{};
    return k < c_.size() ? c_[k] : zero;
}

const GaussianRational& Polynomial::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading() of zero polynomial");
    return c_.back();
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back() == GaussianRational(1, 0);
}

bool Polynomial::has_integer_coeffs() const {
    for (const auto& q : c_)
        if (!q.is_integer()) return false;
    return true;
}

GaussianRational Polynomial::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!s.empty()) s += " + ";
        s += c_[i].to_string();
        if (i > 0) s += "*z^" + std::to_string(i);
    }
    return s;
}

Polynomial poly_from_roots(const std::vector<GaussianInt>& roots) {
    std::vector<GaussianRational> c{GaussianRational(1, 0)};
    for (const auto& r : roots) {
        GaussianRational rr{r};
        std::vector<GaussianRational> nc(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] = nc[i + 1] + c[i];
            nc[i] = nc[i] - rr * c[i];
        }
        c = std::move(nc);
    }
    return Polynomial(std::move(c));
}

std::vector<GaussianInt> power_sums(const std::vector<GaussianInt>& s, int k_max) {
    if (k_max < 1) throw std::invalid_argument("power_sums: k_max must be >= 1");
    std::vector<GaussianInt> out((size_t)k_max, GaussianInt{0, 0});
    std::vector<GaussianInt> pw(s.begin(), s.end());
    for (int k = 0; k < k_max; ++k) {
        for (size_t i = 0; i < s.size(); ++i) {
            out[(size_t)k] += pw[i];
            pw[i] *= s[i];
        }
    }
    return out;
}

std::vector<GaussianRational> elem_from_power(const std::vector<GaussianRational>& p, int n) {
    if ((int)p.size() < n) throw std::invalid_argument("elem_from_power: need n power sums");
    std::vector<GaussianRational> e((size_t)n + 1);
    e[0] = GaussianRational(1, 0);
    for (int k = 1; k <= n; ++k) {
        GaussianRational acc;
        for (int i = 1; i <= k; ++i) {
            GaussianRational term = e[(size_t)(k - i)] * p[(size_t)(i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[(size_t)k] = acc / GaussianRational(k, 0);
    }
    return {e.begin() + 1, e.end()};
}

std::vector<GaussianRational> power_from_elem(const std::vector<GaussianRational>& e, int k_max) {
    auto ek = [&](int j) -> GaussianRational {
        if (j < 1 || j > (int)e.size()) return GaussianRational{};
        return e[(size_t)(j - 1)];
    };
    std::vector<GaussianRational> p((size_t)std::max(k_max, 0));
    for (int k = 1; k <= k_max; ++k) {
        // k*e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, solved for p_k
        GaussianRational acc = ek(k) * GaussianRational(k, 0);
        for (int i = 1; i < k; ++i) {
            GaussianRational term = ek(k - i) * p[(size_t)(i - 1)];
            acc = (i % 2 == 1) ? acc - term : acc + term;
        }
        p[(size_t)(k - 1)] = (k % 2 == 1) ? acc : -acc;
    }
    return p;
}

Polynomial lagrange_interpolate(
    const std::vector<std::pair<GaussianRational, GaussianRational>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("lagrange_interpolate: duplicate abscissa " +
                                            points[i].first.to_string());
    Polynomial acc;
    for (size_t j = 0; j < points.size(); ++j) {
        Polynomial basis = Polynomial::constant(GaussianRational(1, 0));
        GaussianRational denom(1, 0);
        for (size_t l = 0; l < points.size(); ++l) {
            if (l == j) continue;
            basis = basis * Polynomial({-points[l].first, GaussianRational(1, 0)});
            denom = denom * (points[j].first - points[l].first);
        }
        acc = acc + basis.scaled(points[j].second / denom);
    }
    return acc;
}

bool divide_linear_exact(std::vector<GaussianInt>& coeffs, const GaussianInt& r) {
    if (coeffs.size() < 2) return false;
    std::vector<GaussianInt> q(coeffs.size() - 1);
    GaussianInt carry = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs[i] + r * carry;
    }
    if (!carry.is_zero()) return false;
    coeffs = std::move(q);
    return true;
}

std::vector<std::pair<GaussianInt, int>> gaussian_roots_int(std::vector<GaussianInt> coeffs,
                                                            unsigned budget_bits) {
    if (coeffs.empty()) throw std::invalid_argument("gaussian_roots: zero polynomial");
    if (!(coeffs.back() == GaussianInt{1, 0}))
        throw std::invalid_argument("gaussian_roots: polynomial must be monic");
    std::vector<std::pair<GaussianInt, int>> out;
    size_t zero_mult = 0;
    while (zero_mult < coeffs.size() - 1 && coeffs[zero_mult].is_zero()) ++zero_mult;
    if (zero_mult) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + (long)zero_mult);
        out.emplace_back(GaussianInt{0, 0}, (int)zero_mult);
    }
    if (coeffs.size() > 1) {
        const GaussianInt c0 = coeffs.front();
        BigInt n0 = c0.norm();
        if (n0.bit_length() > budget_bits + 1 || BigInt::cmp(n0, BigInt(2).pow(budget_bits)) > 0)
            throw root_budget_error("gaussian_roots: constant term norm " + n0.to_string() +
                                    " exceeds budget");
        GFactorization f = factor(c0);
        bool done = false;
        for_each_divisor(f, [&](const GaussianInt& d) {
            if (done) return;
            for (int t = 0; t < 4; ++t) {
                GaussianInt cand = unit_pow_i(t) * d;
                int mult = 0;
                while (coeffs.size() > 1 && divide_linear_exact(coeffs, cand)) ++mult;
                if (mult) out.emplace_back(cand, mult);
                if (coeffs.size() <= 1) {
                    done = true;
                    return;
                }
            }
        });
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return gauss_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<GaussianInt, int>> gaussian_roots(const Polynomial& p, unsigned budget_bits) {
    if (p.is_zero()) throw std::invalid_argument("gaussian_roots: zero polynomial");
    if (!p.is_monic() || !p.has_integer_coeffs())
        throw std::invalid_argument("gaussian_roots: need a monic integer polynomial");
    std::vector<GaussianInt> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) coeffs.push_back(q.as_integer());
    return gaussian_roots_int(std::move(coeffs), budget_bits);
}

}  // namespace pte
