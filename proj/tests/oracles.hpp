#pragma once

// Reference computations used only by tests. Each one takes a different
// route from the library code it checks.

#include "froberg/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace froberg::oracle {

// Pascal's triangle, rows 0..max_row.
inline std::vector<std::vector<BigInt>> pascal_triangle(std::size_t max_row) {
    std::vector<std::vector<BigInt>> t(max_row + 1);
    for (std::size_t a = 0; a <= max_row; ++a) {
        t[a].assign(a + 1, 1);
        for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
}

inline BigInt pascal(std::size_t a, std::size_t b) {
    static const auto table = pascal_triangle(120);
    if (b > a) return 0;
    return table.at(a).at(b);
}

// (1 - t^d)^z / (1-t)^n on 0..D by z naive shift-subtract products and n
// running sums, without any binomial formula.
inline std::vector<BigInt> symbolic_quotient_raw(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                                 std::uint32_t D) {
    std::vector<BigInt> c(D + 1, 0);
    c[0] = 1;
    for (std::uint64_t i = 0; i < z; ++i) {
        for (std::uint32_t m = D + 1; m-- > d;) c[m] -= c[m - d];
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t m = 1; m <= D; ++m) c[m] += c[m - 1];
    }
    return c;
}

inline std::vector<BigInt> truncate_first_negative(std::vector<BigInt> c) {
    std::size_t i = 0;
    while (i < c.size() && c[i] >= 0) ++i;
    for (; i < c.size(); ++i) c[i] = 0;
    return c;
}

inline std::vector<BigInt> symbolic_quotient(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                             std::uint32_t D) {
    return truncate_first_negative(symbolic_quotient_raw(n, d, z, D));
}

// Rank over GF(p) by fraction-free elimination: row_j <- piv * row_j - a_j * row_i,
// never inverting anything.
inline std::size_t fraction_free_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && a[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            const std::uint64_t lead = a[r][c] % p;
            if (lead == 0) continue;
            const std::uint64_t pv = a[rk][c] % p;
            for (std::size_t j = 0; j < cols; ++j) {
                const std::uint64_t lhs = (pv * (a[r][j] % p)) % p;
                const std::uint64_t rhs = (lead * (a[rk][j] % p)) % p;
                a[r][j] = (lhs + p - rhs) % p;
            }
        }
        ++rk;
    }
    return rk;
}

// Sparse polynomial keyed by exponent vector.
using SparsePoly = std::map<std::vector<std::uint32_t>, std::uint64_t>;

inline SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, std::uint64_t p) {
    SparsePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<std::uint32_t> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] = (out[e] + ca * cb) % p;
        }
    }
    return out;
}

// Every exponent vector of degree m in n variables, by brute force over the
// box [0, m]^n.
inline std::vector<std::vector<std::uint32_t>> brute_force_monomials(std::uint32_t n, std::uint32_t m) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> e(n, 0);
    while (true) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        if (s == m) out.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == m) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return out;
}

}  // namespace froberg::oracle
