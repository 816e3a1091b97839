#include "froberg/errors.hpp"
#include "froberg/series.hpp"
#include "froberg/verifier.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <iostream>

using namespace froberg;

namespace {

SamplingConfig config(FormClass cls = FormClass::DenseGeneric, std::uint64_t seed = 1,
                      std::uint32_t trials = 3) {
    SamplingConfig cfg;
    cfg.form_class = cls;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}

oracle::SparsePoly as_sparse(const FormVector& f) {
    oracle::SparsePoly poly;
    const auto basis = monomials(f.num_vars(), f.degree());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.coeffs()[i] != 0) {
            poly[std::vector<std::uint32_t>(basis[i].exponents().begin(), basis[i].exponents().end())] =
                f.coeffs()[i];
        }
    }
    return poly;
}

}  // namespace

TEST(PowerOfLinear, BinomialExpansion) {
    const std::vector<std::uint64_t> x_plus_y{1, 1};
    const auto f = power_of_linear(x_plus_y, 2, kDefaultPrime);
    EXPECT_EQ(std::vector<std::uint64_t>(f.coeffs().begin(), f.coeffs().end()),
              (std::vector<std::uint64_t>{1, 2, 1}));

    const std::vector<std::uint64_t> x{1, 0, 0};
    const auto g = power_of_linear(x, 3, kDefaultPrime);
    ASSERT_EQ(g.coeffs().size(), 10u);
    EXPECT_EQ(g.coeffs()[0], 1u);
    for (std::size_t i = 1; i < 10; ++i) EXPECT_EQ(g.coeffs()[i], 0u);
}

TEST(PowerOfLinear, MatchesRepeatedMultiplication) {
    const std::uint64_t p = 1000003;
    Rng rng(3);
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (std::uint32_t d = 1; d <= 5; ++d) {
            std::vector<std::uint64_t> linear(n);
            for (auto& c : linear) c = 1 + rng() % (p - 1);
            oracle::SparsePoly ell;
            for (std::uint32_t i = 0; i < n; ++i) {
                std::vector<std::uint32_t> e(n, 0);
                e[i] = 1;
                ell[e] = linear[i];
            }
            oracle::SparsePoly power{{std::vector<std::uint32_t>(n, 0), 1}};
            for (std::uint32_t i = 0; i < d; ++i) power = oracle::multiply(power, ell, p);
            EXPECT_EQ(as_sparse(power_of_linear(linear, d, p)), power) << n << ' ' << d;
        }
    }
}

TEST(SampleForm, DeterministicPerSeed) {
    for (auto cls : {FormClass::DenseGeneric, FormClass::PowerOfLinear}) {
        Rng a(42), b(42), c(43);
        const auto fa = sample_form(cls, 4, 3, kDefaultPrime, a);
        const auto fb = sample_form(cls, 4, 3, kDefaultPrime, b);
        const auto fc = sample_form(cls, 4, 3, kDefaultPrime, c);
        EXPECT_EQ(fa, fb);
        EXPECT_NE(fa, fc);
        EXPECT_EQ(fa.coeffs().size(), 20u);
    }
}

TEST(SampleForm, NeverZeroEvenOverTinyField) {
    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        EXPECT_NO_THROW(sample_form(FormClass::DenseGeneric, 1, 1, 2, rng));
        EXPECT_NO_THROW(sample_form(FormClass::PowerOfLinear, 2, 1, 2, rng));
    }
}

TEST(FormVector, Validation) {
    EXPECT_THROW(FormVector(2, 2, 7, {0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(FormVector(2, 2, 7, {1, 0}), std::invalid_argument);
    EXPECT_THROW(FormVector(2, 2, 7, {1, 0, 9}), std::invalid_argument);
    EXPECT_NO_THROW(FormVector(2, 2, 7, {0, 0, 6}));
}

TEST(FormClassNames, Parse) {
    EXPECT_EQ(parse_form_class("dense"), FormClass::DenseGeneric);
    EXPECT_EQ(parse_form_class("power"), FormClass::PowerOfLinear);
    EXPECT_THROW(parse_form_class("sparse"), std::invalid_argument);
    EXPECT_EQ(to_string(FormClass::PowerOfLinear), "power");
}

TEST(MultiplicationMatrix, SingleFormDegreeZero) {
    const FormVector f(3, 2, kDefaultPrime, {1, 2, 3, 4, 5, 6});
    const std::vector<FormVector> forms{f};
    const auto m = multiplication_matrix(forms, 0);
    ASSERT_EQ(m.rows(), 6u);
    ASSERT_EQ(m.cols(), 1u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(m.at(i, 0), f.coeffs()[i]);
}

TEST(MultiplicationMatrix, LinearFormTimesVariables) {
    // form = x, k = 1: columns are x*x and x*y, i.e. unit vectors at x^2, xy.
    const std::vector<FormVector> forms{FormVector(2, 1, kDefaultPrime, {1, 0})};
    const auto m = multiplication_matrix(forms, 1);
    EXPECT_EQ(m, PrimeFieldMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
}

TEST(MultiplicationMatrix, ShapeAndBruteForceProducts) {
    Rng rng(11);
    std::vector<FormVector> forms;
    for (int i = 0; i < 3; ++i) forms.push_back(sample_form(FormClass::DenseGeneric, 3, 2, kDefaultPrime, rng));
    const auto m = multiplication_matrix(forms, 1);
    EXPECT_EQ(m.rows(), 10u);
    EXPECT_EQ(m.cols(), 9u);

    for (std::uint32_t k : {0u, 1u, 2u, 3u}) {
        const auto mk = multiplication_matrix(forms, k);
        const auto multipliers = oracle::brute_force_monomials(3, k);
        const auto rows = monomials(3, 2 + k);
        // Column order inside a block follows the canonical order of multipliers.
        const auto canon = monomials(3, k);
        ASSERT_EQ(canon.size(), multipliers.size());
        for (std::size_t i = 0; i < forms.size(); ++i) {
            for (std::size_t j = 0; j < canon.size(); ++j) {
                const oracle::SparsePoly mono{
                    {std::vector<std::uint32_t>(canon[j].exponents().begin(), canon[j].exponents().end()), 1}};
                const auto product = oracle::multiply(mono, as_sparse(forms[i]), kDefaultPrime);
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const std::vector<std::uint32_t> key(rows[r].exponents().begin(), rows[r].exponents().end());
                    const auto it = product.find(key);
                    const std::uint64_t expected = it == product.end() ? 0 : it->second;
                    ASSERT_EQ(mk.at(r, i * canon.size() + j), expected);
                }
            }
        }
    }
}

TEST(MultiplicationMatrix, Errors) {
    EXPECT_THROW(multiplication_matrix({}, 1), std::invalid_argument);
    const std::vector<FormVector> mixed{FormVector(2, 1, kDefaultPrime, {1, 0}),
                                        FormVector(2, 2, kDefaultPrime, {1, 0, 0})};
    EXPECT_THROW(multiplication_matrix(mixed, 1), std::invalid_argument);
    Rng rng(1);
    std::vector<FormVector> forms{sample_form(FormClass::DenseGeneric, 6, 4, kDefaultPrime, rng)};
    EXPECT_THROW(multiplication_matrix(forms, 6, 400), ResourceError);
}

TEST(EmpiricalHf, OracleValues) {
    EXPECT_EQ(empirical_hf(3, 2, 3, 1, config()).max, 9u);
    EXPECT_EQ(empirical_hf(2, 3, 2, 1, config()).max, 4u);
    for (std::uint32_t k = 0; k <= 4; ++k) {
        EXPECT_EQ(empirical_hf(3, 3, 1, k, config()).max, dim_graded(3, k));
        EXPECT_EQ(empirical_hf(3, 3, 1, k, config(FormClass::PowerOfLinear)).max, dim_graded(3, k));
    }
    const auto zero = empirical_hf(3, 2, 0, 2, config());
    EXPECT_EQ(zero.per_trial, (std::vector<std::uint64_t>{0, 0, 0}));
}

TEST(EmpiricalHf, RankBoundAndNestedMonotonicity) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (std::uint32_t d = 1; d <= 3; ++d) {
            for (std::uint32_t k = 0; k <= 2; ++k) {
                std::uint64_t prev_first_trial = 0;
                for (std::uint64_t z = 1; z <= 8; ++z) {
                    const auto hf = empirical_hf(n, d, z, k, config(FormClass::DenseGeneric, 5, 2));
                    const BigInt bound = std::min<BigInt>(BigInt(z) * dim_graded(n, k), dim_graded(n, d + k));
                    for (auto r : hf.per_trial) EXPECT_LE(BigInt(r), bound);
                    // Same stream per trial, so the z-form sample is a prefix of the (z+1)-form one.
                    EXPECT_GE(hf.per_trial[0], prev_first_trial);
                    prev_first_trial = hf.per_trial[0];
                }
            }
        }
    }
}

TEST(EmpiricalHf, ThreadCountDoesNotChangeResults) {
    auto serial = config(FormClass::DenseGeneric, 9, 6);
    auto parallel = serial;
    parallel.threads = 4;
    const auto a = empirical_hf(4, 3, 7, 2, serial);
    const auto b = empirical_hf(4, 3, 7, 2, parallel);
    EXPECT_EQ(a.per_trial, b.per_trial);
}

TEST(EmpiricalHf, SmallPrimeDropsAreVisiblePerTrial) {
    // Over GF(2) random specializations often lose rank; max over trials is
    // still bounded by the generic value.
    auto cfg = config(FormClass::DenseGeneric, 1, 8);
    cfg.prime = 2;
    const auto hf = empirical_hf(3, 2, 3, 1, cfg);
    EXPECT_LE(hf.max, 9u);
}

TEST(IntersectionAz, OracleValues) {
    EXPECT_EQ(intersection_dim_az(3, 2, 1, 1, config()).max, 0u);
    EXPECT_EQ(intersection_dim_az(3, 2, 1, 4, config()).max, 3u);
    EXPECT_THROW(intersection_dim_az(3, 2, 1, 0, config()), std::invalid_argument);
}

TEST(IntersectionAz, ZeroBelowInjectiveThreshold) {
    for (std::uint32_t n = 3; n <= 5; ++n) {
        for (std::uint32_t d = 2; d <= 4; ++d) {
            const std::uint32_t k = 1;
            for (std::uint64_t z = 1; z <= 12; ++z) {
                // a_z = 0 iff multiplication stays injective with z + 1 forms.
                if (theorem1_status(n, d, k, z + 1).regime != Regime::KnownInjective) continue;
                EXPECT_EQ(intersection_dim_az(n, d, k, z, config()).max, 0u) << n << ' ' << d << ' ' << z;
            }
        }
    }
}

TEST(AzSequence, ConsistentWithPointwiseAz) {
    const auto cfg = config(FormClass::DenseGeneric, 17, 2);
    const auto seq = az_sequence(3, 3, 2, 9, cfg);
    ASSERT_EQ(seq.values.size(), 9u);
    for (std::uint64_t z = 1; z <= 9; ++z) {
        EXPECT_EQ(seq.values[z - 1], intersection_dim_az(3, 3, 2, z, cfg).max) << z;
    }
    EXPECT_EQ(seq.dim_sk, 6u);
}

TEST(AzSequence, Example) {
    const auto seq = az_sequence(3, 2, 1, 5, config());
    EXPECT_EQ(seq.values, (std::vector<std::uint64_t>{0, 0, 2, 3, 3}));
    EXPECT_EQ(seq.z0, 3u);
    EXPECT_EQ(seq.z1, 4u);
    EXPECT_TRUE(seq.has_lemma_shape());
    EXPECT_TRUE(seq.band_within_bound());
}

TEST(AzSequence, ShapeCheckOnSyntheticSequences) {
    AzSequence s;
    s.dim_sk = 3;
    s.values = {0, 0, 1, 2, 3, 3};
    EXPECT_TRUE(s.has_lemma_shape());
    s.values = {0, 3, 3};
    EXPECT_TRUE(s.has_lemma_shape());
    s.values = {0, 1, 1, 3};
    EXPECT_FALSE(s.has_lemma_shape());
    s.values = {0, 2, 3, 2};
    EXPECT_FALSE(s.has_lemma_shape());
    s.values = {0, 2, 4};
    EXPECT_FALSE(s.has_lemma_shape());
    s.values = {1, 0, 3};
    EXPECT_FALSE(s.has_lemma_shape());
    s.values = {0, 0, 1, 2};
    EXPECT_TRUE(s.has_lemma_shape());

    s.z0 = 2;
    s.z1 = 5;
    EXPECT_TRUE(s.band_within_bound());
    s.z1 = 6;
    EXPECT_FALSE(s.band_within_bound());
}

TEST(Verify, ThreeVariableQuadrics) {
    const auto rep = verify_against_conjecture(3, 2, 4, 5, config());
    ASSERT_EQ(rep.records.size(), 4u);
    const std::vector<std::uint64_t> expected{4, 10, 15, 21};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(rep.records[i].degree, 2 + i);
        EXPECT_EQ(rep.records[i].max_empirical, expected[i]);
        EXPECT_TRUE(rep.records[i].match);
        EXPECT_TRUE(rep.records[i].proven);
    }
    EXPECT_TRUE(rep.all_match());
    EXPECT_FALSE(rep.proven_mismatch());
}

TEST(Verify, ZeroGenerators) {
    const auto rep = verify_against_conjecture(4, 3, 0, 8, config());
    for (const auto& r : rep.records) {
        EXPECT_EQ(r.max_empirical, 0u);
        EXPECT_EQ(r.conjectured, 0);
        EXPECT_TRUE(r.match);
    }
}

TEST(Verify, ClassInvarianceOnPinnedInstance) {
    const auto dense = verify_against_conjecture(3, 2, 4, 5, config(FormClass::DenseGeneric));
    const auto power = verify_against_conjecture(3, 2, 4, 5, config(FormClass::PowerOfLinear));
    for (std::size_t i = 0; i < dense.records.size(); ++i) {
        EXPECT_EQ(dense.records[i].max_empirical, power.records[i].max_empirical);
    }
}

TEST(Verify, ClassDivergencesAreReportedNotFatal) {
    int divergent = 0;
    for (std::uint32_t n = 2; n <= 4; ++n) {
        for (std::uint32_t d = 2; d <= 3; ++d) {
            for (std::uint64_t z = 1; z <= 8; ++z) {
                const auto dense = verify_against_conjecture(n, d, z, d + 3, config(FormClass::DenseGeneric));
                const auto power = verify_against_conjecture(n, d, z, d + 3, config(FormClass::PowerOfLinear));
                for (std::size_t i = 0; i < dense.records.size(); ++i) {
                    const auto& a = dense.records[i];
                    const auto& b = power.records[i];
                    // Theorem 1 regimes hold for both classes.
                    if (a.regime.regime != Regime::Unknown) EXPECT_EQ(a.max_empirical, b.max_empirical);
                    if (a.max_empirical != b.max_empirical) {
                        ++divergent;
                        std::cout << "  class divergence n=" << n << " d=" << d << " z=" << z
                                  << " degree=" << a.degree << " dense=" << a.max_empirical
                                  << " power=" << b.max_empirical << '\n';
                    }
                }
            }
        }
    }
    RecordProperty("class_divergences", divergent);
}

TEST(Verify, PowersOfLinearFormsKnownException) {
    // Five cubes of linear forms in three variables miss one quartic.
    const auto rep = verify_against_conjecture(3, 3, 5, 6, config(FormClass::PowerOfLinear));
    const auto& deg4 = rep.records.at(1);
    EXPECT_EQ(deg4.degree, 4u);
    EXPECT_EQ(deg4.conjectured, 15);
    EXPECT_EQ(deg4.max_empirical, 14u);
    EXPECT_FALSE(deg4.proven);
    EXPECT_EQ(deg4.evidence, Evidence::ObservedBelow);
    EXPECT_FALSE(rep.proven_mismatch());
}

TEST(Verify, ProvenInstanceRules) {
    const RegimeStatus unknown{Regime::Unknown, std::nullopt};
    EXPECT_TRUE(is_proven_instance(3, 9, FormClass::DenseGeneric, unknown));
    EXPECT_FALSE(is_proven_instance(3, 9, FormClass::PowerOfLinear, unknown));
    EXPECT_TRUE(is_proven_instance(2, 9, FormClass::PowerOfLinear, unknown));
    EXPECT_TRUE(is_proven_instance(5, 6, FormClass::PowerOfLinear, unknown));
    EXPECT_FALSE(is_proven_instance(5, 7, FormClass::DenseGeneric, unknown));
    EXPECT_TRUE(is_proven_instance(5, 70, FormClass::DenseGeneric, {Regime::KnownSurjective, BigInt(1)}));
}

TEST(Verify, EvidenceLabels) {
    const auto rep = verify_against_conjecture(4, 2, 3, 6, config());
    for (const auto& r : rep.records) {
        EXPECT_TRUE(r.match);
        if (BigInt(r.max_empirical) == r.rank_bound) EXPECT_EQ(r.evidence, Evidence::CertifiedEqual);
        else EXPECT_EQ(r.evidence, Evidence::CertifiedAtLeast);
    }
}

TEST(VerifyJson, RoundTripPreservesBytes) {
    const auto rep = verify_against_conjecture(3, 2, 4, 5, config());
    const auto text = to_json(rep).dump(2);
    const auto back = verification_report_from_json(nlohmann::ordered_json::parse(text));
    EXPECT_EQ(to_json(back).dump(2), text);
    EXPECT_NE(text.find("\"provenMismatch\": false"), std::string::npos);
}

TEST(VerifyTable, MentionsCharacteristicCaveat) {
    const auto table = to_table(verify_against_conjecture(2, 3, 2, 8, config()));
    EXPECT_NE(table.find("GF(p)"), std::string::npos);
    EXPECT_NE(table.find("all degrees match"), std::string::npos);
}
