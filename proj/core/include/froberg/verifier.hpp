#pragma once

/**
 * Empirical Hilbert functions of ideals generated by random forms.
 *
 * Generic forms are modelled by uniformly random forms over GF(p). The
 * dimension of the degree-(d+k) component of <g_1..g_z> is the rank of the
 * multiplication matrix whose columns are the products (monomial of degree
 * k) * g_i. A random specialization can only lose rank, so the maximum over
 * trials is a certified lower bound for the generic value; reaching the
 * conjectured value certifies "at least", and reaching the trivial upper
 * bound min(z dim S_k, dim S_{d+k}) certifies equality.
 *
 * Caveat: the objects of interest live in characteristic zero. Ranks mod a
 * large prime are the usual surrogate; they are evidence, not a proof, when
 * they fall short of the conjectured value.
 *
 * Randomness is split per (trial, k): each trial of each degree draws its
 * forms from its own mt19937_64 stream seeded by mixing (seed, trial, k), so
 * results do not depend on evaluation order or thread count. Within a
 * stream forms are drawn in order, so the first z forms of a larger sample
 * are exactly the z-form sample (generator sets are nested in z).
 */

#include "froberg/combinatorics.hpp"
#include "froberg/criterion.hpp"
#include "froberg/gfp_linalg.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace froberg {

enum class FormClass { DenseGeneric, PowerOfLinear };

/// "dense" / "power".
std::string to_string(FormClass c);
/// Accepts "dense" and "power"; throws std::invalid_argument otherwise.
FormClass parse_form_class(std::string_view s);

// A nonzero degree-d form over GF(p); coefficient i belongs to the i-th
// monomial of monomials(n, d).
class FormVector {
public:
    FormVector(std::uint32_t n, std::uint32_t d, std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint32_t num_vars() const noexcept { return n_; }
    std::uint32_t degree() const noexcept { return d_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const FormVector&, const FormVector&) = default;

private:
    std::uint32_t n_;
    std::uint32_t d_;
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

using Rng = std::mt19937_64;

/// SplitMix64-style mixing of a base seed with two stream labels.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// l^d for the linear form sum_i linear[i] x_i, via exact multinomial
/// coefficients reduced mod p.
FormVector power_of_linear(std::span<const std::uint64_t> linear, std::uint32_t d, std::uint64_t p);

FormVector sample_form(FormClass cls, std::uint32_t n, std::uint32_t d, std::uint64_t p, Rng& rng);

/// dim S_{d+k} x (z dim S_k) matrix; column (i, j) holds the coefficients of
/// (j-th degree-k monomial) * forms[i]. Throws ResourceError beyond `cap`.
PrimeFieldMatrix multiplication_matrix(std::span<const FormVector> forms, std::uint32_t k,
                                       std::uint64_t cap = kDefaultMatrixCap);

struct SamplingConfig {
    FormClass form_class = FormClass::DenseGeneric;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::uint32_t trials = 3;
    unsigned threads = 1;
    std::uint64_t matrix_cap = kDefaultMatrixCap;
};

struct HfEstimate {
    std::vector<std::uint64_t> per_trial;
    std::uint64_t max = 0;
};

/// Rank of the degree-(d+k) multiplication matrix of z random forms, per trial.
HfEstimate empirical_hf(std::uint32_t n, std::uint32_t d, std::uint64_t z, std::uint32_t k,
                        const SamplingConfig& cfg);

struct AzEstimate {
    std::vector<std::uint64_t> per_trial;
    std::uint64_t max = 0;
};

/// a_z = dim(<g_1..g_z>_{d+k} ∩ <g>_{d+k}) = HF(z) + dim S_k - HF(z+1), with
/// g the (z+1)-th form of the same trial stream.
AzEstimate intersection_dim_az(std::uint32_t n, std::uint32_t d, std::uint32_t k, std::uint64_t z,
                               const SamplingConfig& cfg);

struct AzSequence {
    std::uint32_t n = 1;
    std::uint32_t d = 1;
    std::uint32_t k = 1;
    std::uint64_t dim_sk = 1;
    std::vector<std::uint64_t> values;  // values[z-1] = a_z, max over trials
    std::optional<std::uint64_t> z0;    // first z with a_z != 0
    std::optional<std::uint64_t> z1;    // first z with a_z == dim S_k

    /// Zero up to z0, strictly increasing until dim S_k, then constant.
    bool has_lemma_shape() const;
    /// z1 - z0 <= dim S_k (vacuously true if either is missing).
    bool band_within_bound() const;
};

/// a_1..a_{z_max}; one stream per trial, shared by all z.
AzSequence az_sequence(std::uint32_t n, std::uint32_t d, std::uint32_t k, std::uint64_t z_max,
                       const SamplingConfig& cfg);

enum class Evidence {
    CertifiedEqual,    // max rank hit min(z dim S_k, dim S_{d+k})
    CertifiedAtLeast,  // max rank equals the conjectured value below that bound
    ObservedBelow,     // max rank under the conjectured value
    AboveConjecture,   // max rank over the conjectured value
};

std::string to_string(Evidence e);

struct DegreeRecord {
    std::uint32_t degree = 0;
    std::uint32_t k = 0;
    std::vector<std::uint64_t> empirical;  // one rank per trial
    std::uint64_t max_empirical = 0;
    BigInt conjectured;
    BigInt rank_bound;
    RegimeStatus regime;
    bool proven = false;  // conjectured value is a theorem for this instance
    bool match = false;
    Evidence evidence = Evidence::CertifiedEqual;
};

struct VerificationReport {
    std::uint32_t n = 1;
    std::uint32_t d = 1;
    std::uint64_t z = 0;
    std::uint32_t D = 0;
    FormClass form_class = FormClass::DenseGeneric;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::uint32_t trials = 1;
    std::vector<DegreeRecord> records;  // degrees d..D

    bool all_match() const;
    bool proven_mismatch() const;
};

/// True when the Froberg value for (n, d, z) at degree d+k is a known
/// theorem independent of this library: a Known regime, z <= n + 1, or a
/// ring with few variables (n <= 3 for dense forms, n <= 2 for powers of
/// linear forms).
bool is_proven_instance(std::uint32_t n, std::uint64_t z, FormClass cls, const RegimeStatus& regime);

VerificationReport verify_against_conjecture(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                             std::uint32_t D, const SamplingConfig& cfg);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const nlohmann::ordered_json& j);
std::string to_table(const VerificationReport& report);

}  // namespace froberg
