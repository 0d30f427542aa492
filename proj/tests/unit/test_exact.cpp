#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pnorm/estimator.hpp"
#include "pnorm/exact.hpp"
#include "pnorm/structured.hpp"
#include "support.hpp"

using namespace pnorm;
using namespace pnorm::exact;
namespace t = pnorm::testing;

namespace {
const complex I{0, 1};
Exponent P(double p) { return Exponent::finite(p); }
const Exponent INF = Exponent::infinity();
}  // namespace

TEST(NormOne, Examples) {
    EXPECT_EQ(norm_one(t::magic3()).value, 15.0);
    EXPECT_EQ(norm_one(CMatrix::identity(3)).value, 1.0);
    const auto r = norm_one(CMatrix{{1, 2}, {3, 4}});
    EXPECT_EQ(r.value, 6.0);
    EXPECT_EQ(r.index, 1u);
}

TEST(NormOne, SmallestIndexOnTies) { EXPECT_EQ(norm_one(t::magic3()).index, 0u); }

TEST(NormInf, Examples) {
    EXPECT_EQ(norm_inf(t::magic3()).value, 15.0);
    const auto r = norm_inf(CMatrix{{1, 2}, {3, 4}});
    EXPECT_EQ(r.value, 7.0);
    EXPECT_EQ(r.index, 1u);
    EXPECT_EQ(norm_inf(CMatrix::zeros(2, 2)).value, 0.0);
}

TEST(NormTwo, Examples) {
    EXPECT_NEAR(norm_two(CMatrix::identity(4)), 1.0, 1e-14);
    EXPECT_NEAR(norm_two(t::magic3()), 15.0, 1e-12);
    EXPECT_NEAR(norm_two(CMatrix{{0, 2}, {0, 0}}), 2.0, 1e-14);
    EXPECT_EQ(norm_two(CMatrix::zeros(3, 3)), 0.0);
}

TEST(NormTwo, RectangularAndComplex) {
    EXPECT_NEAR(norm_two(CMatrix{{3, 4}}), 5.0, 1e-13);
    EXPECT_NEAR(norm_two(CMatrix{{I, 0}, {0, -2.0 * I}}), 2.0, 1e-14);
}

TEST(NormTwo, MatchesPowerIteration) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const CMatrix a = t::random_complex(1 + trial % 8, rng);
        EXPECT_LT(t::rel_err(norm_two(a), t::power_two_norm(a, 5000)), 1e-8) << trial;
    }
}

TEST(HermitianEigenvalues, KnownSpectrum) {
    const CMatrix h{{2, I}, {-I, 2}};
    const auto ev = hermitian_eigenvalues(h);
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0], 1.0, 1e-13);
    EXPECT_NEAR(ev[1], 3.0, 1e-13);
}

TEST(HermitianEigenvalues, TraceAndFrobeniusPreserved) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = t::random_complex(2 + trial % 6, rng);
        const CMatrix h = adjoint(a) * a;
        const auto ev = hermitian_eigenvalues(h);
        double tr = 0, fro = 0, sum = 0, sq = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) tr += h(i, i).real();
        for (auto z : h.entries()) fro += std::norm(z);
        for (double e : ev) sum += e, sq += e * e;
        EXPECT_LT(t::rel_err(tr, sum), 1e-12);
        EXPECT_LT(t::rel_err(fro, sq), 1e-11);
    }
}

TEST(AnchorNorms, Examples) {
    const auto m = anchor_norms(t::magic3());
    EXPECT_EQ(m.n1, 15.0);
    EXPECT_NEAR(m.n2, 15.0, 1e-12);
    EXPECT_EQ(m.ninf, 15.0);

    const auto d = anchor_norms(CMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(d.n1, 3.0);
    EXPECT_NEAR(d.n2, 3.0, 1e-14);
    EXPECT_EQ(d.ninf, 3.0);

    const CMatrix a{{1, 1}, {0, 0}};
    const auto r = anchor_norms(a);
    EXPECT_EQ(r.n1, 1.0);
    EXPECT_NEAR(r.n2, std::sqrt(2.0), 1e-14);
    EXPECT_EQ(r.ninf, 2.0);
    // Independent reference: real angle sweep.
    EXPECT_NEAR(estimator::oracle_norm(a, P(2)).value, std::sqrt(2.0), 1e-9);
}

TEST(IsPIsometry, Examples) {
    // sigma = (2, 3, 1) in 1-based form, phases (1, i, -1).
    const CMatrix s = structured::densify(structured::UnitaryPermutation({1, 2, 0}, {1.0, I, -1.0}));
    EXPECT_TRUE(is_p_isometry(s, P(3)));
    EXPECT_TRUE(is_p_isometry(CMatrix::identity(4), P(1.7)));
    EXPECT_TRUE(is_p_isometry(CMatrix::identity(4), INF));
    EXPECT_FALSE(is_p_isometry(CMatrix{{1, 1}, {0, 0}}, P(1.5)));
    EXPECT_THROW(is_p_isometry(CMatrix(2, 3), P(2)), dimension_error);
}

TEST(IsPIsometry, TwoRejectsNonPermutationUnitary) {
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_FALSE(is_p_isometry(CMatrix{{r, r}, {r, -r}}, P(2)));
}

// Properties.

TEST(Properties, DualityOneInf) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const CMatrix a = t::random_complex(1 + trial % 8, rng);
        EXPECT_EQ(norm_one(a).value, norm_inf(adjoint(a)).value);
    }
}

TEST(Properties, TwoNormBelowGeometricMean) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = anchor_norms(t::random_complex(1 + trial % 8, rng));
        EXPECT_LE(m.n2, std::sqrt(m.n1 * m.ninf) * (1 + 1e-9));
        EXPECT_GE(m.n1, 0.0);
    }
}

TEST(Properties, UnitaryPermutationAnchorsAreOne) {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> u(0, 6.283185307179586);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 7;
        std::vector<std::size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<complex> ph(n);
        for (auto& z : ph) z = std::polar(1.0, u(rng));
        const auto m = anchor_norms(structured::densify(structured::UnitaryPermutation(sigma, ph)));
        EXPECT_NEAR(m.n1, 1.0, 1e-14);
        EXPECT_NEAR(m.n2, 1.0, 1e-12);
        EXPECT_NEAR(m.ninf, 1.0, 1e-14);
    }
}

TEST(Properties, EstimateBelowScaledTwoNorm) {
    std::mt19937_64 rng(26);
    const Exponent ps[] = {P(1), P(1.5), P(3), INF};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const CMatrix a = t::random_complex(n, rng);
        const double n2 = norm_two(a);
        for (const auto& p : ps) {
            const double lower = estimator::ascent_lower_bound(a, p).value;
            EXPECT_LE(lower, std::pow(double(n), std::abs(0.5 - p.reciprocal())) * n2 + 1e-9);
        }
    }
}

TEST(Properties, TwoNormMatchesOracle) {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = t::random_real(2 + trial % 2, rng);
        EXPECT_NEAR(norm_two(a), estimator::oracle_norm(a, P(2)).value, 1e-6);
    }
}
