#include "froberg/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace froberg {

namespace {

std::uint32_t common_degree(const IntegerSeries& a, const IntegerSeries& b) {
    return std::min(a.truncation_degree(), b.truncation_degree());
}

// (1 - t^d)^z mod t^{D+1} by binary exponentiation.
IntegerSeries one_minus_power(std::uint32_t d, std::uint64_t z, std::uint32_t D) {
    IntegerSeries result(D);
    result[0] = 1;
    IntegerSeries base(D);
    base[0] = 1;
    if (d <= D) base[d] = -1;
    while (z > 0) {
        if (z & 1) result = result * base;
        z >>= 1;
        if (z > 0) base = base * base;
    }
    return result;
}

}  // namespace

IntegerSeries::IntegerSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("IntegerSeries: need at least one coefficient");
}

IntegerSeries IntegerSeries::operator+(const IntegerSeries& o) const {
    IntegerSeries r(common_degree(*this, o));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

IntegerSeries IntegerSeries::operator-(const IntegerSeries& o) const {
    IntegerSeries r(common_degree(*this, o));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

IntegerSeries IntegerSeries::operator*(const IntegerSeries& o) const {
    const std::uint32_t D = common_degree(*this, o);
    IntegerSeries r(D);
    for (std::uint32_t i = 0; i <= D; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; i + j <= D; ++j) {
            if (o.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

IntegerSeries full_ring_series(std::uint32_t n, std::uint32_t D) {
    IntegerSeries s(D);
    for (std::uint32_t m = 0; m <= D; ++m) s[m] = dim_graded(n, m);
    return s;
}

IntegerSeries truncate_at_first_negative(const IntegerSeries& s) {
    IntegerSeries out = s;
    bool cut = false;
    for (std::uint32_t i = 0; i <= out.truncation_degree(); ++i) {
        if (!cut && out[i] < 0) cut = true;
        if (cut) out[i] = 0;
    }
    return out;
}

IntegerSeries froberg_quotient_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                      std::uint32_t D) {
    if (d == 0) throw std::invalid_argument("froberg_quotient_series: d must be >= 1");
    IntegerSeries ring = full_ring_series(n, D);
    if (z == 0) return ring;
    return truncate_at_first_negative(one_minus_power(d, z, D) * ring);
}

IntegerSeries froberg_ideal_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                   std::uint32_t D) {
    return full_ring_series(n, D) - froberg_quotient_series(n, d, z, D);
}

IntegerSeries min_form_series(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                              std::uint32_t D) {
    if (d == 0) throw std::invalid_argument("min_form_series: d must be >= 1");
    IntegerSeries s(D);
    for (std::uint32_t m = d; m <= D; ++m) {
        const std::uint32_t k = m - d;
        s[m] = std::min<BigInt>(BigInt(z) * dim_graded(n, k), dim_graded(n, m));
    }
    return s;
}

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

nlohmann::ordered_json to_json(const SeriesRecord& rec) {
    nlohmann::ordered_json j;
    j["n"] = rec.n;
    j["d"] = rec.d;
    j["z"] = rec.z;
    j["D"] = rec.series.truncation_degree();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : rec.series.coeffs()) coeffs.push_back(bigint_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

SeriesRecord series_record_from_json(const nlohmann::ordered_json& j) {
    SeriesRecord rec;
    rec.n = j.at("n").get<std::uint32_t>();
    rec.d = j.at("d").get<std::uint32_t>();
    rec.z = j.at("z").get<std::uint64_t>();
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
    rec.series = IntegerSeries(std::move(coeffs));
    if (rec.series.truncation_degree() != j.at("D").get<std::uint32_t>()) {
        throw std::invalid_argument("series JSON: D does not match coefficient count");
    }
    return rec;
}

std::string series_to_csv(const IntegerSeries& s) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (std::uint32_t m = 0; m <= s.truncation_degree(); ++m) os << m << ',' << s[m] << '\n';
    return os.str();
}

}  // namespace froberg
