#pragma once

/**
 * Exact integer combinatorics for the polynomial ring S = K[x_1..x_n]:
 * binomial coefficients, dimensions of graded components S_m, and the
 * canonical monomial basis of S_m.
 *
 * Canonical order: inside one degree, monomials are listed in
 * lexicographic order with x_1 > x_2 > ... > x_n, so for n = 2, m = 2 the
 * basis is x_1^2, x_1 x_2, x_2^2. Every matrix layout in the library refers
 * to this order.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace froberg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default limit on the number of monomials `monomials()` will materialise.
inline constexpr std::uint64_t kDefaultMonomialCap = 5'000'000;

// A monomial x_1^{e_1} ... x_n^{e_n}; n >= 1 and the cached degree always
// equals the exponent sum.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::uint32_t> exponents);
    // Throws std::invalid_argument if `degree` disagrees with the exponents.
    ExponentVector(std::vector<std::uint32_t> exponents, std::uint32_t degree);

    std::size_t num_vars() const noexcept { return exponents_.size(); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
    std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

    std::string to_string() const;

private:
    std::vector<std::uint32_t> exponents_;
    std::uint32_t degree_ = 0;
};

/// C(a, b) exactly; zero when b > a.
BigInt binomial(std::uint64_t a, std::uint64_t b);

/// dim S_m = C(m + n - 1, n - 1). Requires n >= 1.
BigInt dim_graded(std::uint32_t n, std::uint64_t m);

/// dim S_m as a machine word; throws std::overflow_error if it does not fit.
std::uint64_t dim_graded_u64(std::uint32_t n, std::uint64_t m);

/// All monomials of degree m in n variables, in canonical order.
/// Throws ResourceError if there are more than `cap` of them.
std::vector<ExponentVector> monomials(std::uint32_t n, std::uint32_t m,
                                      std::uint64_t cap = kDefaultMonomialCap);

/// Position of v inside monomials(v.num_vars(), v.degree()).
std::uint64_t monomial_index(const ExponentVector& v);

/// Same as above on a raw exponent sequence. Throws std::invalid_argument
/// for an empty sequence.
std::uint64_t monomial_index(std::span<const std::uint32_t> exponents);

/// Word-sized version of monomial_index for hot loops. Precomputes
/// dim S_m for up to n variables and degrees up to max_degree; throws
/// std::overflow_error if any of them does not fit in 64 bits.
class GradedIndexer {
public:
    GradedIndexer(std::uint32_t n, std::uint32_t max_degree);

    std::uint32_t num_vars() const noexcept { return n_; }
    std::uint32_t max_degree() const noexcept { return max_degree_; }
    std::uint64_t dim(std::uint32_t vars, std::uint32_t degree) const {
        return table_[static_cast<std::size_t>(vars) * (max_degree_ + 1) + degree];
    }
    /// Requires exponents.size() == num_vars() and total degree <= max_degree().
    std::uint64_t index(std::span<const std::uint32_t> exponents) const;

private:
    std::uint32_t n_;
    std::uint32_t max_degree_;
    std::vector<std::uint64_t> table_;  // (vars, degree) -> dim, vars in 0..n
};

}  // namespace froberg
