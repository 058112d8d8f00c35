// Tests for the quadratic-invariant solver: dimension of the invariant
// space, primitive generator normalization, proportionality with the
// K-theory Gram matrix (with independently frozen scalars), invariance under
// short words in the generators, an independent elimination oracle for the
// kernel dimension, and the structural reflection-column relations.

#include <gtest/gtest.h>

#include <random>
#include <utility>
#include <vector>

#include "hginv/ci_data.hpp"
#include "hginv/euler_k.hpp"
#include "hginv/hypergroup.hpp"
#include "hginv/invariants.hpp"
#include "random_cases.hpp"

using namespace hginv;

namespace {

struct Pipeline {
    CIData data;
    GroupGenerators gens;
    InvariantSpace space;
};

Pipeline run(const std::vector<int>& q, const std::vector<int>& d) {
    Pipeline p;
    p.data = build_data(q, d);
    p.gens = generators(p.data);
    p.space = invariant_space(p.gens);
    return p;
}

// The nine worked cases with the scalar relating X̄ to the normalized
// generator, frozen from an independent computation.
std::vector<Int> catalog_scalars() {
    return {Int(-5), Int(-1), Int(-2), Int(-2), Int(-3), Int(2), Int(2), Int(-4), Int(-2)};
}

// Check h·X·hᵀ = X with rational X.
bool conjugation_fixes(const IntMatrix& h, const RatMatrix& x) {
    RatMatrix hr = h.cast<Rat>();
    return matmul(matmul(hr, x), hr.transpose()) == x;
}

// Independent oracle for the invariant-space dimension: build the stacked
// constraint system through an explicit Kronecker product and row-reduce it
// with plain Gaussian elimination (no fraction-free machinery).
RatMatrix kronecker_less_identity(const IntMatrix& h) {
    const std::size_t Q = h.rows();
    RatMatrix m(Q * Q, Q * Q);
    for (std::size_t i = 0; i < Q; ++i)
        for (std::size_t j = 0; j < Q; ++j)
            for (std::size_t k = 0; k < Q; ++k)
                for (std::size_t l = 0; l < Q; ++l) m(i * Q + j, k * Q + l) = Rat(h(i, k) * h(j, l));
    for (std::size_t e = 0; e < Q * Q; ++e) m(e, e) -= 1;
    return m;
}

std::size_t naive_nullity(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rat f = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return m.cols() - rank;
}

std::size_t oracle_dimension(const GroupGenerators& gens) {
    RatMatrix a = kronecker_less_identity(gens.h0);
    RatMatrix b = kronecker_less_identity(gens.h_infty);
    RatMatrix stacked(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) stacked(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(a.rows() + i, j) = b(i, j);
    return naive_nullity(std::move(stacked));
}

}  // namespace

TEST(InvariantSpace, CatalogIsOneDimensional) {
    for (const auto& [q, d] : testutil::catalog()) {
        Pipeline p = run(q, d);
        EXPECT_EQ(p.space.dimension, 1u);
        ASSERT_TRUE(p.space.generator.has_value());
        EXPECT_EQ(p.space.basis.size(), 1u);
    }
}

TEST(InvariantSpace, GeneratorIsPrimitiveWithPositiveLeadingEntry) {
    for (const auto& [q, d] : testutil::catalog()) {
        Pipeline p = run(q, d);
        const IntMatrix& g = *p.space.generator;
        Int content(0);
        for (const Int& x : g.data()) content = int_gcd(content, x);
        EXPECT_EQ(content, 1);
        for (const Int& x : g.data()) {
            if (x == 0) continue;
            EXPECT_GT(x, 0);
            break;
        }
    }
}

TEST(InvariantSpace, BasisElementsAreFixedByAllThreeGenerators) {
    for (const auto& [q, d] : testutil::catalog()) {
        Pipeline p = run(q, d);
        for (const RatMatrix& x : p.space.basis) {
            EXPECT_TRUE(conjugation_fixes(p.gens.h0, x));
            EXPECT_TRUE(conjugation_fixes(p.gens.h_infty, x));
            EXPECT_TRUE(conjugation_fixes(p.gens.h1, x));
        }
    }
}

TEST(InvariantSpace, RankOneCaseIsTrivialLine) {
    Pipeline p = run({1}, {1});
    EXPECT_EQ(p.space.dimension, 1u);
    ASSERT_TRUE(p.space.generator.has_value());
    EXPECT_EQ((*p.space.generator)(0, 0), 1);
}

TEST(InvariantSpace, CoincidingLocalDataGivesHigherDimension) {
    // q = d makes h0 = h_infty⁻¹, so only one constraint survives and the
    // fixed space grows beyond a line.
    Pipeline p = run({1, 2, 3}, {1, 2, 3});
    EXPECT_GT(p.space.dimension, 1u);
    EXPECT_FALSE(p.space.generator.has_value());
    for (const RatMatrix& x : p.space.basis) {
        EXPECT_TRUE(conjugation_fixes(p.gens.h0, x));
        EXPECT_TRUE(conjugation_fixes(p.gens.h_infty, x));
    }
}

TEST(InvariantSpace, DimensionMatchesNaiveEliminationOracle) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{1, 1, 1, 1, 1}, {5}}, {{1, 1, 1, 1}, {4}},    {{1, 1, 1, 1}, {2, 2}},
        {{1, 1, 2}, {4}},       {{1, 2, 3}, {1, 2, 3}}, {{1}, {1}},
        {{1, 1}, {2}},          {{1, 1, 1}, {3}},       {{1, 1, 1}, {1, 2}},
    };
    for (const auto& [q, d] : cases) {
        Pipeline p = run(q, d);
        EXPECT_EQ(p.space.dimension, oracle_dimension(p.gens));
    }
}

TEST(InvariantSpace, RandomCasesAreOneDimensional) {
    std::mt19937 rng(20260816u);
    for (int trial = 0; trial < 12; ++trial) {
        auto [q, d] = testutil::random_case(rng, 2, 9, true);
        Pipeline p = run(q, d);
        EXPECT_EQ(p.space.dimension, 1u) << "trial " << trial;
    }
}

TEST(InvariantSpace, LargeWitnessIsOneDimensional) {
    Pipeline p = run({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {5, 7});
    EXPECT_EQ(p.space.dimension, 1u);
}

TEST(InvariantSpace, GeneratorFixedByShortWordsInTheGroup) {
    for (const auto& [q, d] : {std::pair<std::vector<int>, std::vector<int>>{{1, 1, 1, 1, 1}, {5}},
                               {{1, 1, 2}, {4}}}) {
        Pipeline p = run(q, d);
        RatMatrix x = p.space.generator->cast<Rat>();
        std::vector<RatMatrix> letters = {
            p.gens.h0.cast<Rat>(),
            inverse_unimodular(p.gens.h0).cast<Rat>(),
            p.gens.h_infty.cast<Rat>(),
            inverse_unimodular(p.gens.h_infty).cast<Rat>(),
        };
        std::vector<RatMatrix> words = {RatMatrix::identity(p.data.Q)};
        std::size_t layer_start = 0;
        for (int len = 1; len <= 4; ++len) {
            std::size_t layer_end = words.size();
            for (std::size_t w = layer_start; w < layer_end; ++w)
                for (const RatMatrix& letter : letters) words.push_back(matmul(words[w], letter));
            layer_start = layer_end;
        }
        for (const RatMatrix& w : words) EXPECT_TRUE(matmul(matmul(w, x), w.transpose()) == x);
    }
}

TEST(VerifyTheorem, CatalogScalarsMatchFrozenValues) {
    auto cases = testutil::catalog();
    auto scalars = catalog_scalars();
    ASSERT_EQ(cases.size(), scalars.size());
    for (std::size_t c = 0; c < cases.size(); ++c) {
        Pipeline p = run(cases[c].first, cases[c].second);
        RestrictedGram rg = restricted_gram(p.data, collection_matrices(p.data));
        TheoremVerification tv = verify_theorem(p.space, rg);
        EXPECT_TRUE(tv.report.pass) << tv.report.detail;
        EXPECT_EQ(tv.scalar, Rat(scalars[c])) << "case " << c;
        // Cross-check the proportionality entrywise.
        for (std::size_t i = 0; i < rg.Xbar.rows(); ++i)
            for (std::size_t j = 0; j < rg.Xbar.cols(); ++j)
                EXPECT_EQ(rg.Xbar(i, j), scalars[c] * (*p.space.generator)(i, j));
    }
}

TEST(VerifyTheorem, PerturbedGramFailsProportionality) {
    Pipeline p = run({1, 1, 1, 1, 1}, {5});
    RestrictedGram rg = restricted_gram(p.data, collection_matrices(p.data));
    rg.Xbar(0, 1) += 1;
    TheoremVerification tv = verify_theorem(p.space, rg);
    EXPECT_FALSE(tv.report.pass);
    EXPECT_NE(tv.report.detail.find("proportional"), std::string::npos);
}

TEST(VerifyTheorem, HigherDimensionalSpaceFails) {
    Pipeline p = run({1, 2, 3}, {1, 2, 3});
    RestrictedGram rg = restricted_gram(p.data, collection_matrices(p.data));
    TheoremVerification tv = verify_theorem(p.space, rg);
    EXPECT_FALSE(tv.report.pass);
    EXPECT_NE(tv.report.detail.find("dimension"), std::string::npos);
}

TEST(ReflectionRelations, CatalogPasses) {
    for (const auto& [q, d] : testutil::catalog()) {
        Pipeline p = run(q, d);
        VerificationReport r = verify_reflection_relations(p.gens, p.space);
        EXPECT_TRUE(r.pass) << r.detail;
        EXPECT_TRUE(r.detail.empty()) << r.detail;  // none of these are degenerate
    }
}

TEST(ReflectionRelations, QuinticOddCaseHasZeroCorner) {
    Pipeline p = run({1, 1, 1, 1, 1}, {5});
    EXPECT_EQ(p.gens.h1(0, 0), 1);  // (h1)_{11} = (−1)^{n+1}, n = 3
    EXPECT_EQ((*p.space.generator)(0, 0), 0);
    VerificationReport r = verify_reflection_relations(p.gens, p.space);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(ReflectionRelations, QuarticSurfaceEvenCaseMatchesHalfFactorByHand) {
    Pipeline p = run({1, 1, 1, 1}, {4});
    const IntMatrix& g = *p.space.generator;
    EXPECT_EQ(p.gens.h1(0, 0), -1);  // n = 2
    // Column of the reflection part: (h1)_{·1} = (−1, 4, −6, 4).
    EXPECT_EQ(p.gens.h1(1, 0), 4);
    EXPECT_EQ(p.gens.h1(2, 0), -6);
    EXPECT_EQ(p.gens.h1(3, 0), 4);
    // X_{i1} = −½ (h1)_{i1} X_{11} with X the primitive generator.
    EXPECT_EQ(g(0, 0), 1);
    EXPECT_EQ(g(1, 0), -2);
    EXPECT_EQ(g(2, 0), 3);
    EXPECT_EQ(g(3, 0), -2);
    VerificationReport r = verify_reflection_relations(p.gens, p.space);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(ReflectionRelations, IdentityReflectionIsDegeneratePass) {
    Pipeline p = run({1, 2, 3}, {1, 2, 3});
    EXPECT_EQ(p.gens.h1, IntMatrix::identity(p.data.Q));
    VerificationReport r = verify_reflection_relations(p.gens, p.space);
    EXPECT_TRUE(r.pass);
    EXPECT_NE(r.detail.find("degenerate"), std::string::npos);
}

TEST(ReflectionRelations, RankOneCaseIsVacuousPass) {
    Pipeline p = run({1}, {1});
    VerificationReport r = verify_reflection_relations(p.gens, p.space);
    EXPECT_TRUE(r.pass);
}

TEST(ReflectionRelations, TamperedGeneratorFails) {
    Pipeline p = run({1, 1, 1, 1, 1}, {5});
    InvariantSpace tampered = p.space;
    IntMatrix g = *tampered.generator;
    g(0, 0) = 1;  // odd case requires a zero corner
    tampered.generator = g;
    VerificationReport r = verify_reflection_relations(p.gens, tampered);
    EXPECT_FALSE(r.pass);
}
