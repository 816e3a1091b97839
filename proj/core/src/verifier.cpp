#include "froberg/verifier.hpp"

#include "froberg/errors.hpp"
#include "froberg/series.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace froberg {

namespace {

constexpr const char* kCharacteristicNote =
    "ranks computed over GF(p); they certify generic values from below only";

std::uint64_t uniform_residue(Rng& rng, std::uint64_t p) {
    return std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
}

// Runs fn(t) for t in [0, trials), on up to `threads` workers. Each slot is
// written by exactly one worker, so the result is independent of scheduling.
template <class Result, class Fn>
std::vector<Result> run_trials(std::uint32_t trials, unsigned threads, Fn fn) {
    std::vector<Result> out(trials);
    if (threads <= 1 || trials <= 1) {
        for (std::uint32_t t = 0; t < trials; ++t) out[t] = fn(t);
        return out;
    }
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
        for (std::uint32_t t = next++; t < trials; t = next++) {
            try {
                out[t] = fn(t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<unsigned>(threads, trials); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<FormVector> sample_forms(FormClass cls, std::uint32_t n, std::uint32_t d,
                                     std::uint64_t p, std::uint64_t count, Rng& rng) {
    std::vector<FormVector> forms;
    forms.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) forms.push_back(sample_form(cls, n, d, p, rng));
    return forms;
}

// Columns [0, cols) of m.
PrimeFieldMatrix leading_columns(const PrimeFieldMatrix& m, std::size_t cols) {
    PrimeFieldMatrix out(m.rows(), cols, m.modulus(), std::max(m.rows(), cols));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, row[c]);
    }
    return out;
}

// HF(j) for j = 1..count using the first j forms of one sample.
std::vector<std::uint64_t> prefix_ranks(std::span<const FormVector> forms, std::uint32_t k,
                                        std::uint64_t cap) {
    const PrimeFieldMatrix full = multiplication_matrix(forms, k, cap);
    const std::size_t block = full.cols() / forms.size();
    std::vector<std::uint64_t> ranks;
    ranks.reserve(forms.size());
    for (std::size_t j = 1; j < forms.size(); ++j) ranks.push_back(rank(leading_columns(full, j * block)));
    ranks.push_back(rank(full));
    return ranks;
}

void check_sizes(std::uint32_t n, std::uint32_t d, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (d == 0) throw std::invalid_argument("d must be >= 1");
    if (p != kDefaultPrime && (p > UINT32_MAX || !is_probable_prime(p))) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
}

}  // namespace

std::string to_string(FormClass c) {
    return c == FormClass::DenseGeneric ? "dense" : "power";
}

FormClass parse_form_class(std::string_view s) {
    if (s == "dense") return FormClass::DenseGeneric;
    if (s == "power") return FormClass::PowerOfLinear;
    throw std::invalid_argument("unknown form class '" + std::string(s) + "' (expected dense|power)");
}

FormVector::FormVector(std::uint32_t n, std::uint32_t d, std::uint64_t p,
                       std::vector<std::uint64_t> coeffs)
    : n_(n), d_(d), p_(p), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != dim_graded_u64(n, d)) {
        throw std::invalid_argument("FormVector: expected " + dim_graded(n, d).str() +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
    bool nonzero = false;
    for (auto c : coeffs_) {
        if (c >= p) throw std::invalid_argument("FormVector: coefficient not reduced mod p");
        nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw std::invalid_argument("FormVector: form is identically zero");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

FormVector power_of_linear(std::span<const std::uint64_t> linear, std::uint32_t d, std::uint64_t p) {
    const auto n = static_cast<std::uint32_t>(linear.size());
    const auto basis = monomials(n, d);
    BigInt d_factorial = 1;
    for (std::uint32_t i = 2; i <= d; ++i) d_factorial *= i;

    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& mono : basis) {
        BigInt denom = 1;
        for (auto e : mono.exponents()) {
            for (std::uint32_t i = 2; i <= e; ++i) denom *= i;
        }
        const BigInt multinomial = d_factorial / denom;
        const auto reduced = static_cast<std::uint64_t>(multinomial % p);
        if (reduced == 0) {
            std::clog << "warning: multinomial coefficient " << multinomial << " of "
                      << mono.to_string() << " vanishes mod " << p << '\n';
        }
        std::uint64_t c = reduced;
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t e = 0; e < mono[i]; ++e) c = mulmod(c, linear[i] % p, p);
        }
        coeffs.push_back(c);
    }
    return FormVector(n, d, p, std::move(coeffs));
}

FormVector sample_form(FormClass cls, std::uint32_t n, std::uint32_t d, std::uint64_t p, Rng& rng) {
    if (cls == FormClass::PowerOfLinear) {
        std::vector<std::uint64_t> linear(n);
        do {
            for (auto& c : linear) c = uniform_residue(rng, p);
        } while (std::all_of(linear.begin(), linear.end(), [](auto c) { return c == 0; }));
        return power_of_linear(linear, d, p);
    }
    std::vector<std::uint64_t> coeffs(dim_graded_u64(n, d));
    do {
        for (auto& c : coeffs) c = uniform_residue(rng, p);
    } while (std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; }));
    return FormVector(n, d, p, std::move(coeffs));
}

PrimeFieldMatrix multiplication_matrix(std::span<const FormVector> forms, std::uint32_t k,
                                       std::uint64_t cap) {
    if (forms.empty()) throw std::invalid_argument("multiplication_matrix: no forms");
    const std::uint32_t n = forms.front().num_vars();
    const std::uint32_t d = forms.front().degree();
    const std::uint64_t p = forms.front().modulus();
    for (const auto& f : forms) {
        if (f.num_vars() != n || f.degree() != d || f.modulus() != p) {
            throw std::invalid_argument("multiplication_matrix: forms disagree on (n, d, p)");
        }
    }

    const BigInt rows = dim_graded(n, d + k);
    const BigInt cols = BigInt(forms.size()) * dim_graded(n, k);
    if (rows > cap || cols > cap) {
        throw ResourceError("multiplication matrix " + rows.str() + "x" + cols.str() +
                                " exceeds the size cap of " + std::to_string(cap),
                            static_cast<std::uint64_t>(std::min<BigInt>(rows, UINT64_MAX)),
                            static_cast<std::uint64_t>(std::min<BigInt>(cols, UINT64_MAX)));
    }

    const auto multipliers = monomials(n, k);
    const auto basis = monomials(n, d);
    const GradedIndexer indexer(n, d + k);

    // product_row[j * |basis| + l] = row of multipliers[j] * basis[l].
    std::vector<std::size_t> product_row(multipliers.size() * basis.size());
    std::vector<std::uint32_t> sum(n);
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
        for (std::size_t l = 0; l < basis.size(); ++l) {
            for (std::uint32_t v = 0; v < n; ++v) sum[v] = multipliers[j][v] + basis[l][v];
            product_row[j * basis.size() + l] = indexer.index(sum);
        }
    }

    PrimeFieldMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), p, cap);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto coeffs = forms[i].coeffs();
        for (std::size_t j = 0; j < multipliers.size(); ++j) {
            const std::size_t col = i * multipliers.size() + j;
            for (std::size_t l = 0; l < basis.size(); ++l) {
                if (coeffs[l] != 0) m.set(product_row[j * basis.size() + l], col, coeffs[l]);
            }
        }
    }
    return m;
}

HfEstimate empirical_hf(std::uint32_t n, std::uint32_t d, std::uint64_t z, std::uint32_t k,
                        const SamplingConfig& cfg) {
    check_sizes(n, d, cfg.prime);
    if (cfg.trials == 0) throw std::invalid_argument("empirical_hf: trials must be >= 1");
    HfEstimate est;
    est.per_trial = run_trials<std::uint64_t>(cfg.trials, cfg.threads, [&](std::uint32_t t) {
        if (z == 0) return std::uint64_t{0};
        Rng rng(derive_seed(cfg.seed, t, k));
        const auto forms = sample_forms(cfg.form_class, n, d, cfg.prime, z, rng);
        return static_cast<std::uint64_t>(rank(multiplication_matrix(forms, k, cfg.matrix_cap)));
    });
    est.max = *std::max_element(est.per_trial.begin(), est.per_trial.end());
    return est;
}

AzEstimate intersection_dim_az(std::uint32_t n, std::uint32_t d, std::uint32_t k, std::uint64_t z,
                               const SamplingConfig& cfg) {
    check_sizes(n, d, cfg.prime);
    if (z == 0) throw std::invalid_argument("intersection_dim_az: z must be >= 1");
    if (cfg.trials == 0) throw std::invalid_argument("intersection_dim_az: trials must be >= 1");
    const std::uint64_t dim_sk = dim_graded_u64(n, k);
    AzEstimate est;
    est.per_trial = run_trials<std::uint64_t>(cfg.trials, cfg.threads, [&](std::uint32_t t) {
        Rng rng(derive_seed(cfg.seed, t, k));
        // g_1..g_z followed by the extra form g.
        const auto forms = sample_forms(cfg.form_class, n, d, cfg.prime, z + 1, rng);
        const auto with_g = rank(multiplication_matrix(forms, k, cfg.matrix_cap));
        const auto without_g =
            rank(multiplication_matrix(std::span(forms).first(z), k, cfg.matrix_cap));
        return static_cast<std::uint64_t>(without_g + dim_sk - with_g);
    });
    est.max = *std::max_element(est.per_trial.begin(), est.per_trial.end());
    return est;
}

AzSequence az_sequence(std::uint32_t n, std::uint32_t d, std::uint32_t k, std::uint64_t z_max,
                       const SamplingConfig& cfg) {
    check_sizes(n, d, cfg.prime);
    if (cfg.trials == 0) throw std::invalid_argument("az_sequence: trials must be >= 1");
    AzSequence seq;
    seq.n = n;
    seq.d = d;
    seq.k = k;
    seq.dim_sk = dim_graded_u64(n, k);
    if (z_max == 0) return seq;

    const auto per_trial = run_trials<std::vector<std::uint64_t>>(
        cfg.trials, cfg.threads, [&](std::uint32_t t) {
            Rng rng(derive_seed(cfg.seed, t, k));
            const auto forms = sample_forms(cfg.form_class, n, d, cfg.prime, z_max + 1, rng);
            const auto hf = prefix_ranks(forms, k, cfg.matrix_cap);  // hf[j-1] = HF(j)
            std::vector<std::uint64_t> az(z_max);
            for (std::uint64_t z = 1; z <= z_max; ++z) az[z - 1] = hf[z - 1] + seq.dim_sk - hf[z];
            return az;
        });

    seq.values.assign(z_max, 0);
    for (const auto& trial : per_trial) {
        for (std::uint64_t i = 0; i < z_max; ++i) seq.values[i] = std::max(seq.values[i], trial[i]);
    }
    for (std::uint64_t z = 1; z <= z_max; ++z) {
        if (!seq.z0 && seq.values[z - 1] != 0) seq.z0 = z;
        if (!seq.z1 && seq.values[z - 1] == seq.dim_sk) seq.z1 = z;
    }
    return seq;
}

bool AzSequence::has_lemma_shape() const {
    std::size_t i = 0;
    while (i < values.size() && values[i] == 0) ++i;
    for (; i < values.size(); ++i) {
        if (values[i] > dim_sk) return false;
        if (i > 0 && values[i] <= values[i - 1]) return false;
        if (values[i] == dim_sk) {
            ++i;
            break;
        }
    }
    for (; i < values.size(); ++i) {
        if (values[i] != dim_sk) return false;
    }
    return true;
}

bool AzSequence::band_within_bound() const {
    if (!z0 || !z1) return true;
    return *z1 - *z0 <= dim_sk;
}

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::CertifiedEqual: return "certified_equal";
        case Evidence::CertifiedAtLeast: return "certified_at_least";
        case Evidence::ObservedBelow: return "observed_below";
        case Evidence::AboveConjecture: return "above_conjecture";
    }
    return "observed_below";
}

bool VerificationReport::all_match() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.match; });
}

bool VerificationReport::proven_mismatch() const {
    return std::any_of(records.begin(), records.end(),
                       [](const auto& r) { return r.proven && !r.match; });
}

bool is_proven_instance(std::uint32_t n, std::uint64_t z, FormClass cls, const RegimeStatus& regime) {
    if (regime.regime != Regime::Unknown) return true;
    if (z <= static_cast<std::uint64_t>(n) + 1) return true;
    return cls == FormClass::DenseGeneric ? n <= 3 : n <= 2;
}

VerificationReport verify_against_conjecture(std::uint32_t n, std::uint32_t d, std::uint64_t z,
                                             std::uint32_t D, const SamplingConfig& cfg) {
    check_sizes(n, d, cfg.prime);
    VerificationReport rep;
    rep.n = n;
    rep.d = d;
    rep.z = z;
    rep.D = D;
    rep.form_class = cfg.form_class;
    rep.prime = cfg.prime;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;

    const IntegerSeries ideal = froberg_ideal_series(n, d, z, D);
    for (std::uint32_t m = d; m <= D; ++m) {
        DegreeRecord rec;
        rec.degree = m;
        rec.k = m - d;
        const HfEstimate hf = empirical_hf(n, d, z, rec.k, cfg);
        rec.empirical = hf.per_trial;
        rec.max_empirical = hf.max;
        rec.conjectured = ideal[m];
        rec.rank_bound = std::min<BigInt>(BigInt(z) * dim_graded(n, rec.k), dim_graded(n, m));
        rec.regime = theorem1_status(n, d, rec.k, z);
        rec.proven = is_proven_instance(n, z, cfg.form_class, rec.regime);
        const BigInt observed = rec.max_empirical;
        rec.match = observed == rec.conjectured;
        if (observed > rec.conjectured) {
            rec.evidence = Evidence::AboveConjecture;
        } else if (observed < rec.conjectured) {
            rec.evidence = Evidence::ObservedBelow;
        } else {
            rec.evidence = observed == rec.rank_bound ? Evidence::CertifiedEqual
                                                      : Evidence::CertifiedAtLeast;
        }
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

nlohmann::ordered_json to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["z"] = rep.z;
    j["D"] = rep.D;
    j["class"] = to_string(rep.form_class);
    j["p"] = rep.prime;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) {
        nlohmann::ordered_json e;
        e["degree"] = r.degree;
        e["k"] = r.k;
        e["empirical"] = r.empirical;
        e["max"] = r.max_empirical;
        e["conjectured"] = bigint_to_json(r.conjectured);
        e["rankBound"] = bigint_to_json(r.rank_bound);
        e["regime"] = to_string(r.regime.regime);
        e["predicted"] = r.regime.predicted_value ? bigint_to_json(*r.regime.predicted_value)
                                                  : nlohmann::ordered_json(nullptr);
        e["proven"] = r.proven;
        e["match"] = r.match;
        e["evidence"] = to_string(r.evidence);
        records.push_back(std::move(e));
    }
    j["records"] = std::move(records);
    j["allMatch"] = rep.all_match();
    j["provenMismatch"] = rep.proven_mismatch();
    j["note"] = kCharacteristicNote;
    return j;
}

VerificationReport verification_report_from_json(const nlohmann::ordered_json& j) {
    VerificationReport rep;
    rep.n = j.at("n").get<std::uint32_t>();
    rep.d = j.at("d").get<std::uint32_t>();
    rep.z = j.at("z").get<std::uint64_t>();
    rep.D = j.at("D").get<std::uint32_t>();
    rep.form_class = parse_form_class(j.at("class").get<std::string>());
    rep.prime = j.at("p").get<std::uint64_t>();
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.trials = j.at("trials").get<std::uint32_t>();
    for (const auto& e : j.at("records")) {
        DegreeRecord r;
        r.degree = e.at("degree").get<std::uint32_t>();
        r.k = e.at("k").get<std::uint32_t>();
        r.empirical = e.at("empirical").get<std::vector<std::uint64_t>>();
        r.max_empirical = e.at("max").get<std::uint64_t>();
        r.conjectured = bigint_from_json(e.at("conjectured"));
        r.rank_bound = bigint_from_json(e.at("rankBound"));
        const auto regime = e.at("regime").get<std::string>();
        r.regime.regime = regime == "KnownInjective"    ? Regime::KnownInjective
                          : regime == "KnownSurjective" ? Regime::KnownSurjective
                                                        : Regime::Unknown;
        if (!e.at("predicted").is_null()) r.regime.predicted_value = bigint_from_json(e.at("predicted"));
        r.proven = e.at("proven").get<bool>();
        r.match = e.at("match").get<bool>();
        const auto ev = e.at("evidence").get<std::string>();
        r.evidence = ev == "certified_equal"      ? Evidence::CertifiedEqual
                     : ev == "certified_at_least" ? Evidence::CertifiedAtLeast
                     : ev == "above_conjecture"   ? Evidence::AboveConjecture
                                                  : Evidence::ObservedBelow;
        rep.records.push_back(std::move(r));
    }
    return rep;
}

std::string to_table(const VerificationReport& rep) {
    std::ostringstream os;
    os << "# verify n=" << rep.n << " d=" << rep.d << " z=" << rep.z << " D=" << rep.D
       << " class=" << to_string(rep.form_class) << " p=" << rep.prime << " seed=" << rep.seed
       << " trials=" << rep.trials << '\n';
    os << "# " << kCharacteristicNote << '\n';
    os << std::left << std::setw(7) << "degree" << std::setw(4) << "k" << std::setw(13)
       << "conjectured" << std::setw(10) << "max_rank" << std::setw(16) << "regime"
       << std::setw(7) << "proven" << std::setw(6) << "match"
       << "evidence  trials\n";
    for (const auto& r : rep.records) {
        std::ostringstream trials;
        for (std::size_t i = 0; i < r.empirical.size(); ++i) trials << (i ? "," : "") << r.empirical[i];
        os << std::left << std::setw(7) << r.degree << std::setw(4) << r.k << std::setw(13)
           << r.conjectured.str() << std::setw(10) << r.max_empirical << std::setw(16)
           << to_string(r.regime.regime) << std::setw(7) << (r.proven ? "yes" : "no")
           << std::setw(6) << (r.match ? "yes" : "NO") << to_string(r.evidence) << "  "
           << trials.str() << '\n';
    }
    os << "# result: " << (rep.all_match() ? "all degrees match" : "mismatch") << ", "
       << (rep.proven_mismatch() ? "MISMATCH in a proven regime" : "no proven-regime mismatch")
       << '\n';
    return os.str();
}

}  // namespace froberg
