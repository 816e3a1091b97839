#include "froberg/combinatorics.hpp"

#include "froberg/errors.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace froberg {

namespace {

std::uint32_t exponent_sum(const std::vector<std::uint32_t>& e) {
    std::uint64_t s = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    if (s > UINT32_MAX) throw std::invalid_argument("ExponentVector: degree overflow");
    return static_cast<std::uint32_t>(s);
}

// Recursive fill in lexicographic order: the first exponent runs from the
// full remaining degree down to zero.
void enumerate(std::uint32_t n, std::uint32_t pos, std::uint32_t remaining,
               std::vector<std::uint32_t>& cur, std::vector<ExponentVector>& out) {
    if (pos + 1 == n) {
        cur[pos] = remaining;
        out.emplace_back(cur, std::accumulate(cur.begin(), cur.end(), 0u));
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate(n, pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("ExponentVector: need n >= 1 variables");
    degree_ = exponent_sum(exponents_);
}

ExponentVector::ExponentVector(std::vector<std::uint32_t> exponents, std::uint32_t degree)
    : ExponentVector(std::move(exponents)) {
    if (degree != degree_) {
        throw std::invalid_argument("ExponentVector: degree " + std::to_string(degree) +
                                    " does not match exponent sum " + std::to_string(degree_));
    }
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ',';
        os << exponents_[i];
    }
    os << ')';
    return os.str();
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt result = 1;
    // Each partial product result * (a - b + i) / i is itself a binomial, so
    // the division is exact.
    for (std::uint64_t i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;
    }
    return result;
}

BigInt dim_graded(std::uint32_t n, std::uint64_t m) {
    if (n == 0) throw std::invalid_argument("dim_graded: n must be >= 1");
    return binomial(m + n - 1, n - 1);
}

std::uint64_t dim_graded_u64(std::uint32_t n, std::uint64_t m) {
    BigInt v = dim_graded(n, m);
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("dim_graded: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

std::vector<ExponentVector> monomials(std::uint32_t n, std::uint32_t m, std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("monomials: n must be >= 1");
    BigInt count = dim_graded(n, m);
    if (count > cap) {
        throw ResourceError("monomials: dim S_" + std::to_string(m) + " in " + std::to_string(n) +
                                " variables is " + count.str() + ", above the cap of " +
                                std::to_string(cap),
                            static_cast<std::uint64_t>(std::min<BigInt>(count, UINT64_MAX)), 1);
    }
    std::vector<ExponentVector> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint32_t> cur(n, 0);
    enumerate(n, 0, m, cur, out);
    return out;
}

std::uint64_t monomial_index(std::span<const std::uint32_t> exponents) {
    if (exponents.empty()) throw std::invalid_argument("monomial_index: empty exponent vector");
    const auto n = static_cast<std::uint32_t>(exponents.size());
    std::uint64_t remaining = 0;
    for (auto e : exponents) remaining += e;

    // Monomials that precede v agree with it on x_1..x_{i-1} and have a
    // larger exponent at x_i; the tail is any monomial of the leftover degree
    // in the remaining n - i - 1 variables.
    std::uint64_t index = 0;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        // sum_{e > v_i} dim S_{remaining - e} over n - i - 1 variables
        // collapses (hockey stick) to one graded dimension in n - i variables.
        if (remaining > exponents[i]) index += dim_graded_u64(n - i, remaining - exponents[i] - 1);
        remaining -= exponents[i];
    }
    return index;
}

std::uint64_t monomial_index(const ExponentVector& v) { return monomial_index(v.exponents()); }

GradedIndexer::GradedIndexer(std::uint32_t n, std::uint32_t max_degree)
    : n_(n), max_degree_(max_degree), table_(static_cast<std::size_t>(n + 1) * (max_degree + 1), 0) {
    if (n == 0) throw std::invalid_argument("GradedIndexer: n must be >= 1");
    for (std::uint32_t v = 1; v <= n; ++v) {
        for (std::uint32_t m = 0; m <= max_degree; ++m) {
            table_[static_cast<std::size_t>(v) * (max_degree + 1) + m] = dim_graded_u64(v, m);
        }
    }
}

std::uint64_t GradedIndexer::index(std::span<const std::uint32_t> exponents) const {
    std::uint32_t remaining = 0;
    for (auto e : exponents) remaining += e;
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i + 1 < n_; ++i) {
        if (remaining > exponents[i]) idx += dim(n_ - i, remaining - exponents[i] - 1);
        remaining -= exponents[i];
    }
    return idx;
}

}  // namespace froberg
