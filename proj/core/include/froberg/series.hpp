#pragma once

/**
 * Truncated formal power series with exact integer coefficients, and the
 * Hilbert series predicted by Froberg's conjecture for z forms of degree d.
 *
 * All series live on the grid 0..D (D = truncation degree). Ideal series
 * keep explicit zeros below degree d so indices line up with quotient and
 * full-ring series.
 */

#include "froberg/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace froberg {

class IntegerSeries {
public:
    IntegerSeries() : coeffs_(1) {}
    // Zero series on 0..truncation_degree.
    explicit IntegerSeries(std::uint32_t truncation_degree) : coeffs_(truncation_degree + 1) {}
    // Throws std::invalid_argument on an empty coefficient list.
    explicit IntegerSeries(std::vector<BigInt> coeffs);

    std::uint32_t truncation_degree() const noexcept {
        return static_cast<std::uint32_t>(coeffs_.size() - 1);
    }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    BigInt& operator[](std::size_t i) { return coeffs_.at(i); }

    // Coefficientwise, on a common truncation degree.
    IntegerSeries operator+(const IntegerSeries& o) const;
    IntegerSeries operator-(const IntegerSeries& o) const;
    // Cauchy product, truncated to the smaller degree.
    IntegerSeries operator*(const IntegerSeries& o) const;

    friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// 1/(1-t)^n mod t^{D+1}; coefficient m is dim S_m.
IntegerSeries full_ring_series(std::uint32_t n, std::uint32_t D);

/// Keeps coefficients strictly before the first negative one; that one and
/// everything after it become zero.
IntegerSeries truncate_at_first_negative(const IntegerSeries& s);

/// [ (1 - t^d)^z / (1-t)^n ] on 0..D.
IntegerSeries froberg_quotient_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                      std::uint32_t D);

/// 1/(1-t)^n - [ (1 - t^d)^z / (1-t)^n ] on 0..D.
IntegerSeries froberg_ideal_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                   std::uint32_t D);

/// sum_k min(z dim S_k, dim S_{d+k}) t^{d+k} on 0..D.
IntegerSeries min_form_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                              std::uint32_t D);

// Serialization. JSON layout: {"n","d","z","D","coeffs":[...]}; coefficients
// that do not fit in 64 bits are written as decimal strings.
struct SeriesRecord {
    std::uint32_t n = 1;
    std::uint32_t d = 1;
    std::uint64_t z = 0;
    IntegerSeries series;

    friend bool operator==(const SeriesRecord&, const SeriesRecord&) = default;
};

nlohmann::ordered_json to_json(const SeriesRecord& rec);
SeriesRecord series_record_from_json(const nlohmann::ordered_json& j);

/// "degree,coefficient" header followed by one row per degree.
std::string series_to_csv(const IntegerSeries& s);

// JSON helpers for exact integers shared by the report writers.
nlohmann::ordered_json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::ordered_json& j);

}  // namespace froberg
