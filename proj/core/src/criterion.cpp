#include "froberg/criterion.hpp"

#include "froberg/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace froberg {

namespace {

// Floor and ceiling of a / b for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

void require_positive(std::uint32_t v, const char* what) {
    if (v == 0) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::KnownInjective: return "KnownInjective";
        case Regime::KnownSurjective: return "KnownSurjective";
        case Regime::Unknown: return "Unknown";
    }
    return "Unknown";
}

RegimeStatus theorem1_status(std::uint32_t n, std::uint32_t d, std::uint32_t k,
                             const BigInt& z) {
    require_positive(n, "n");
    require_positive(d, "d");
    if (z < 0) throw std::invalid_argument("theorem1_status: z must be >= 0");

    const BigInt target = dim_graded(n, d + k);
    if (z == 0) return {Regime::KnownInjective, BigInt(0)};
    if (k == 0) {
        if (z <= target) return {Regime::KnownInjective, z};
        return {Regime::KnownSurjective, target};
    }
    const BigInt s = dim_graded(n, k);
    // z <= target/s - s  <=>  z*s + s^2 <= target, and symmetrically.
    if (z * s + s * s <= target) return {Regime::KnownInjective, z * s};
    if (z * s >= target + s * s) return {Regime::KnownSurjective, target};
    return {Regime::Unknown, std::nullopt};
}

std::optional<ZInterval> prop2_interval(std::uint32_t n, std::uint32_t d, std::uint32_t r) {
    require_positive(n, "n");
    require_positive(d, "d");
    const BigInt s_r = dim_graded(n, r);
    const BigInt s_r1 = dim_graded(n, r + 1);
    BigInt lo = ceil_div(dim_graded(n, d + r + 1) + s_r1 * s_r1, s_r1);
    BigInt hi = floor_div(dim_graded(n, d + r) - s_r * s_r, s_r);
    if (r == 0) {
        const BigInt dim_sd = dim_graded(n, d);
        hi = dim_sd;
        lo = std::min(lo, dim_sd);
    }
    if (lo > hi) return std::nullopt;
    return ZInterval{r, std::move(lo), std::move(hi)};
}

CoverageReport covered_z_set(std::uint32_t n, std::uint32_t d) {
    require_positive(n, "n");
    require_positive(d, "d");
    CoverageReport rep;
    rep.n = n;
    rep.d = d;
    rep.total = dim_graded(n, d);

    for (std::uint32_t r = 0; r <= d + n; ++r) {
        auto iv = prop2_interval(n, d, r);
        if (!iv) continue;
        iv->z_lo = std::max<BigInt>(iv->z_lo, 1);
        iv->z_hi = std::min(iv->z_hi, rep.total);
        if (iv->z_lo <= iv->z_hi) rep.intervals.push_back(std::move(*iv));
    }

    std::vector<ZGap> merged;
    for (const auto& iv : rep.intervals) merged.push_back({iv.z_lo, iv.z_hi});
    std::sort(merged.begin(), merged.end(), [](const ZGap& a, const ZGap& b) { return a.lo < b.lo; });
    std::vector<ZGap> runs;
    for (auto& m : merged) {
        if (!runs.empty() && m.lo <= runs.back().hi + 1) {
            runs.back().hi = std::max(runs.back().hi, m.hi);
        } else {
            runs.push_back(std::move(m));
        }
    }

    rep.covered_count = 0;
    BigInt next = 1;
    for (const auto& run : runs) {
        rep.covered_count += run.size();
        if (run.lo > next) rep.gaps.push_back({next, run.lo - 1});
        next = run.hi + 1;
    }
    if (next <= rep.total) rep.gaps.push_back({next, rep.total});
    rep.p_d = Rational(rep.covered_count, rep.total);
    return rep;
}

Rational probability_pd(std::uint32_t n, std::uint32_t d) { return covered_z_set(n, d).p_d; }

Rational prop3_tail_bound(std::uint32_t n, std::uint32_t d, std::uint32_t k) {
    require_positive(n, "n");
    require_positive(d, "d");
    require_positive(k, "k");
    const BigInt dim_sd = dim_graded(n, d);
    Rational lead(dim_graded(n, d + k + 1), dim_graded(n, k + 1) * dim_sd);
    BigInt tail = 0;
    for (std::uint32_t r = 0; r <= k; ++r) tail += dim_graded(n, r) + dim_graded(n, r + 1);
    return lead + Rational(tail, dim_sd);
}

std::string truncated_decimal(const Rational& q, unsigned places) {
    if (q < 0) throw std::invalid_argument("truncated_decimal: negative value");
    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    const BigInt scaled = numerator(q) * scale / denominator(q);
    const BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled % scale).str();
    std::ostringstream os;
    os << whole;
    if (places > 0) os << '.' << std::string(places - frac.size(), '0') << frac;
    return os.str();
}

nlohmann::ordered_json to_json(const CoverageReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["dimSd"] = bigint_to_json(rep.total);
    auto intervals = nlohmann::ordered_json::array();
    for (const auto& iv : rep.intervals) {
        nlohmann::ordered_json e;
        e["r"] = iv.r;
        e["zLo"] = bigint_to_json(iv.z_lo);
        e["zHi"] = bigint_to_json(iv.z_hi);
        intervals.push_back(std::move(e));
    }
    j["intervals"] = std::move(intervals);
    auto gaps = nlohmann::ordered_json::array();
    for (const auto& g : rep.gaps) {
        gaps.push_back(nlohmann::ordered_json::array({bigint_to_json(g.lo), bigint_to_json(g.hi)}));
    }
    j["gaps"] = std::move(gaps);
    j["covered"] = bigint_to_json(rep.covered_count);
    nlohmann::ordered_json pd;
    pd["num"] = bigint_to_json(numerator(rep.p_d));
    pd["den"] = bigint_to_json(denominator(rep.p_d));
    pd["decimal"] = truncated_decimal(rep.p_d);
    j["pd"] = std::move(pd);
    return j;
}

CoverageReport coverage_report_from_json(const nlohmann::ordered_json& j) {
    CoverageReport rep;
    rep.n = j.at("n").get<std::uint32_t>();
    rep.d = j.at("d").get<std::uint32_t>();
    rep.total = bigint_from_json(j.at("dimSd"));
    for (const auto& e : j.at("intervals")) {
        rep.intervals.push_back({e.at("r").get<std::uint32_t>(), bigint_from_json(e.at("zLo")),
                                 bigint_from_json(e.at("zHi"))});
    }
    for (const auto& g : j.at("gaps")) {
        rep.gaps.push_back({bigint_from_json(g.at(0)), bigint_from_json(g.at(1))});
    }
    rep.covered_count = bigint_from_json(j.at("covered"));
    const auto& pd = j.at("pd");
    rep.p_d = Rational(bigint_from_json(pd.at("num")), bigint_from_json(pd.at("den")));
    return rep;
}

std::vector<SweepRow> coverage_sweep(std::uint32_t n, std::uint32_t d_max) {
    std::vector<SweepRow> rows;
    rows.reserve(d_max);
    for (std::uint32_t d = 1; d <= d_max; ++d) rows.push_back({d, probability_pd(n, d)});
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "d,pd\n";
    for (const auto& row : rows) os << row.d << ',' << truncated_decimal(row.p_d) << '\n';
    return os.str();
}

}  // namespace froberg
