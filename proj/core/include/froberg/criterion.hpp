#pragma once

/**
 * When is the Hilbert function of z generic degree-d forms known?
 *
 * Let s_k = dim S_k and q_k = dim S_{d+k} / s_k. In degree d + k the ideal
 * has dimension z * s_k (multiplication is injective) once z <= q_k - s_k,
 * and fills S_{d+k} once z >= q_k + s_k. Chaining the injective bound at r
 * with the surjective bound at r + 1 pins the whole Hilbert series, which
 * gives one certified interval of z per r. p_d is the fraction of
 * z in [1, dim S_d] that falls into one of these intervals.
 *
 * Everything here is exact: comparisons are done by cross-multiplying
 * integers, and the ceilings/floors of the interval ends are taken on exact
 * rationals.
 */

#include "froberg/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace froberg {

enum class Regime { KnownInjective, KnownSurjective, Unknown };

std::string to_string(Regime r);

struct RegimeStatus {
    Regime regime = Regime::Unknown;
    // Present exactly when regime != Unknown.
    std::optional<BigInt> predicted_value;

    friend bool operator==(const RegimeStatus&, const RegimeStatus&) = default;
};

/// Which side of the degree-(d+k) threshold z lies on.
///
/// For k >= 1 this is the two-sided bound above. For k = 0 the component is
/// spanned by the z forms themselves, so the status is KnownInjective for
/// z <= dim S_d and KnownSurjective beyond.
RegimeStatus theorem1_status(std::uint32_t n, std::uint32_t d, std::uint32_t k,
                             const BigInt& z);

struct ZInterval {
    std::uint32_t r = 0;
    BigInt z_lo;
    BigInt z_hi;

    BigInt size() const { return z_hi - z_lo + 1; }
    friend bool operator==(const ZInterval&, const ZInterval&) = default;
};

/// Integer z with  q_{r+1} + s_{r+1} <= z <= q_r - s_r, if any.
///
/// r = 0 is special: its upper end is raised to dim S_d (from dim S_d - 1),
/// and its lower end is capped at dim S_d, since z >= dim S_d generic forms
/// already span S_d and the series is the trivial one.
std::optional<ZInterval> prop2_interval(std::uint32_t n, std::uint32_t d, std::uint32_t r);

struct ZGap {
    BigInt lo;
    BigInt hi;

    BigInt size() const { return hi - lo + 1; }
    friend bool operator==(const ZGap&, const ZGap&) = default;
};

struct CoverageReport {
    std::uint32_t n = 1;
    std::uint32_t d = 1;
    std::vector<ZInterval> intervals;  // by increasing r, clipped to [1, dim S_d]
    BigInt covered_count;
    BigInt total;  // dim S_d
    Rational p_d;
    std::vector<ZGap> gaps;  // increasing, disjoint

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Union of prop2_interval(n, d, r) for r = 0..d+n.
CoverageReport covered_z_set(std::uint32_t n, std::uint32_t d);

/// covered_z_set(n, d).covered_count / dim S_d.
Rational probability_pd(std::uint32_t n, std::uint32_t d);

/// Explicit upper bound on 1 - p_d for a chosen k:
///   (s_{d+k+1} / s_{k+1}) / s_d + sum_{r=0..k} (s_r + s_{r+1}) / s_d.
Rational prop3_tail_bound(std::uint32_t n, std::uint32_t d, std::uint32_t k);

/// Truncated (not rounded) decimal expansion with `places` digits after the
/// point. Requires q >= 0.
std::string truncated_decimal(const Rational& q, unsigned places = 3);

nlohmann::ordered_json to_json(const CoverageReport& report);
CoverageReport coverage_report_from_json(const nlohmann::ordered_json& j);

struct SweepRow {
    std::uint32_t d;
    Rational p_d;
};

/// p_d for d = 1..d_max.
std::vector<SweepRow> coverage_sweep(std::uint32_t n, std::uint32_t d_max);

/// "d,pd" header followed by one row per d, p_d truncated to three places.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace froberg
