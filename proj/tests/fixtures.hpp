#pragma once

#include <utility>
#include <vector>

#include "pte/solution.hpp"

// Published ideal solutions used as test fixtures.
namespace pte::fixtures {

inline std::vector<GaussianInt> gv(std::initializer_list<std::pair<long long, long long>> v) {
    std::vector<GaussianInt> out;
    for (auto& [a, b] : v) out.emplace_back(a, b);
    return out;
}

inline std::vector<GaussianInt> plus_minus(
    std::initializer_list<std::pair<long long, long long>> half) {
    std::vector<GaussianInt> out;
    for (auto& [a, b] : half) {
        out.emplace_back(a, b);
        out.emplace_back(-a, -b);
    }
    return out;
}

inline std::vector<GaussianInt> negated(const std::vector<GaussianInt>& v) {
    std::vector<GaussianInt> out;
    for (auto& z : v) out.push_back(-z);
    return out;
}

// {0,3,5,11,13,16} =5 {1,1,8,8,15,15}
inline PteSolution size6_integer() {
    return PteSolution::claiming_ideal(
        gv({{0, 0}, {3, 0}, {5, 0}, {11, 0}, {13, 0}, {16, 0}}),
        gv({{1, 0}, {1, 0}, {8, 0}, {8, 0}, {15, 0}, {15, 0}}));
}

// {0,0,0,0} =3 {1,-1,i,-i}
inline PteSolution size4() {
    return PteSolution::claiming_ideal(gv({{0, 0}, {0, 0}, {0, 0}, {0, 0}}),
                                       gv({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

// constant -(1+i)^5 (2-i)^2 (2+i)^7 up to a unit
inline PteSolution size5_a() {
    return PteSolution::claiming_ideal(
        gv({{0, 0}, {0, -5}, {-3, -4}, {1, 3}, {1, 3}}),
        gv({{-5, -5}, {5, 0}, {-4, 3}, {1, -7}, {2, 6}}));
}

// constant i (1+i)^6 (2-i) (2+i)^6 up to a unit
inline PteSolution size5_b() {
    return PteSolution::claiming_ideal(
        gv({{0, 0}, {2, -4}, {3, -1}, {-6, -3}, {-4, -7}}),
        gv({{-5, -5}, {-4, -2}, {4, -3}, {-2, -6}, {2, 1}}));
}

// {3+3i,3+4i,3+5i,-2-8i,-7-4i} =4 its negation
inline PteSolution size5_symmetric() {
    auto x = gv({{3, 3}, {3, 4}, {3, 5}, {-2, -8}, {-7, -4}});
    return PteSolution::claiming_ideal(x, negated(x));
}

// {±1, ±(4+i), ±(3+i)} =5 {±7i, ±(7+4i), ±(7-3i)}
inline PteSolution size6_symmetric() {
    return PteSolution::claiming_ideal(plus_minus({{1, 0}, {4, 1}, {3, 1}}),
                                       plus_minus({{0, 7}, {7, 4}, {7, -3}}));
}

// constant (-i)(1+i)^6 (2-i)^3 (2+i)^2 * 3 * (3+2i)(4+i)(5-2i) up to a unit
inline PteSolution size7() {
    auto x = gv({{3, 1}, {2, 4}, {-3, -4}, {2, -3}, {-5, 2}, {-5, 3}, {6, -3}});
    return PteSolution::claiming_ideal(x, negated(x));
}

// {±(2+2i),±3,±3i,±(2-2i)} =7 {±2,±2i,±i,±1}, constant -5200
inline PteSolution size8_symmetric() {
    return PteSolution::claiming_ideal(plus_minus({{2, 2}, {3, 0}, {0, 3}, {2, -2}}),
                                       plus_minus({{2, 0}, {0, 2}, {0, 1}, {1, 0}}));
}

// constant -(1+i)^22 (2+i)^2 (2-i)^2 3^2 (3+2i)^2 (3-2i)(4+i)(4-i)(5+2i)
inline PteSolution size10_a() {
    return PteSolution::claiming_ideal(
        plus_minus({{9, 1}, {4, 8}, {8, 4}, {3, -3}, {1, -9}}),
        plus_minus({{5, 7}, {8, 0}, {9, 3}, {0, 8}, {1, -7}}));
}

// constant i (1+i)^13 (2+i)^2 (2-i)^2 3^2 (3+2i)^2 (3-2i)(4+i)(4-i)(5+2i)(5-2i)(5+4i)
inline PteSolution size10_b() {
    return PteSolution::claiming_ideal(
        plus_minus({{8, 3}, {9, 4}, {11, 2}, {1, -7}, {5, 7}}),
        plus_minus({{7, 7}, {11, 1}, {11, 4}, {1, 6}, {0, 5}}));
}

// Goldbach's degree-2 family {a+b+d, a+c+d, b+c+d, d} =2 {a+d, b+d, c+d, a+b+c+d}
inline PteSolution goldbach(const GaussianInt& a, const GaussianInt& b, const GaussianInt& c,
                            const GaussianInt& d) {
    return PteSolution({a + b + d, a + c + d, b + c + d, d},
                       {a + d, b + d, c + d, a + b + c + d}, 2);
}

inline std::vector<PteSolution> all_ideal() {
    return {size6_integer(),   size4(),  size5_a(),         size5_b(),  size5_symmetric(),
            size6_symmetric(), size7(),  size8_symmetric(), size10_a(), size10_b()};
}

}  // namespace pte::fixtures
