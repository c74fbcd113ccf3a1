#include <cstddef>
#include <vector>

#include <gtest/gtest.h>

#include <intord/distributions.hpp>

using namespace intord;

namespace
{

const CountTable &table200()
{
    static const CountTable t = build(200);
    return t;
}

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> qs)
{
    std::vector<Rational> out;
    for (auto [a, b] : qs) {
        Rational q(a, b);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

} // namespace

TEST(ReductionSizePmf, HandValues)
{
    const CountTable t = build(5);
    const Pmf lab = reduction_size_pmf(Model::labelled, 4, t);
    EXPECT_EQ(lab.support_offset, 1U);
    EXPECT_EQ(lab.masses, rationals({{1, 207}, {14, 207}, {72, 207}, {120, 207}}));
    EXPECT_EQ(lab.defect, 0);

    const Pmf unl = reduction_size_pmf(Model::unlabelled, 5, t);
    EXPECT_EQ(unl.masses, rationals({{1, 53}, {4, 53}, {12, 53}, {20, 53}, {16, 53}}));

    const Pmf point = reduction_size_pmf(Model::unlabelled, 1, t);
    EXPECT_EQ(point.masses, rationals({{1, 1}}));
}

TEST(ReductionSizePmf, SumsToOneEverywhere)
{
    const CountTable &t = table200();
    for (std::size_t n = 1; n <= 200; n += 7) {
        for (Model m : {Model::unlabelled, Model::labelled}) {
            const Pmf p = reduction_size_pmf(m, n, t);
            EXPECT_EQ(p.defect, 0) << n;
            EXPECT_EQ(p.total(), 1) << n;
        }
    }
}

TEST(PairPmf, HandValues)
{
    const CountTable t = build(5);
    const Pmf p5 = pair_pmf(Model::unlabelled, 5, t);
    EXPECT_EQ(p5.masses, rationals({{16, 53}, {20, 53}, {6, 53}}));
    EXPECT_EQ(p5.defect, Rational(11, 53));

    const Pmf p2 = pair_pmf(Model::unlabelled, 2, t);
    EXPECT_EQ(p2.masses, rationals({{1, 2}, {1, 2}}));
    EXPECT_EQ(p2.defect, 0);

    for (Model m : {Model::unlabelled, Model::labelled}) {
        const Pmf p1 = pair_pmf(m, 1, t);
        EXPECT_EQ(p1.masses, rationals({{1, 1}}));
        EXPECT_EQ(p1.defect, 0);
    }

    // labelled n=3: r_3 3! + r_2 2! 3 = 12 + 6 of 19; the antichain is the defect
    const Pmf l3 = pair_pmf(Model::labelled, 3, t);
    EXPECT_EQ(l3.masses, rationals({{12, 19}, {6, 19}}));
    EXPECT_EQ(l3.defect, Rational(1, 19));
}

TEST(PairPmf, OnePairMassMatchesClosedCount)
{
    const CountTable &t = table200();
    for (std::size_t n = 2; n <= 200; ++n) {
        const Pmf p = pair_pmf(Model::unlabelled, n, t);
        EXPECT_EQ(Rational(p.mass_at(1) * t.i_seq[n]), Rational(t.r_seq[n - 1] * static_cast<unsigned long>(n - 1)));
    }
}

TEST(PairPmf, DefectShrinksLikeOneOverN)
{
    const CountTable &t = table200();
    for (Model m : {Model::unlabelled, Model::labelled}) {
        for (std::size_t n = 20; n <= 100; n += 10) {
            const Rational small = pair_pmf(m, n, t).defect;
            const Rational large = pair_pmf(m, 2 * n, t).defect;
            EXPECT_GE(small, 0);
            EXPECT_LE(large, Rational(3, 4) * small) << n;
        }
    }
}

TEST(PairPmf, PairMassNeverExceedsReductionMass)
{
    const CountTable &t = table200();
    for (std::size_t n : {4U, 30U, 150U}) {
        for (Model m : {Model::unlabelled, Model::labelled}) {
            const Pmf pairs = pair_pmf(m, n, t);
            const Pmf sizes = reduction_size_pmf(m, n, t);
            for (std::size_t j = 0; 2 * j <= n; ++j) {
                EXPECT_LE(pairs.mass_at(j), sizes.mass_at(n - j));
            }
        }
    }
}

TEST(PoissonPmf, Values)
{
    const AsymptoticConstants k = constants(256);
    const auto q6 = poisson_pmf(k.lambda_unlabelled, 4);
    ASSERT_EQ(q6.size(), 5U);
    EXPECT_NEAR(q6[0].to_double(), 0.193025, 5e-7);
    EXPECT_NEAR(q6[1].to_double(), 0.193025289139898 * 1.644934066848226, 1e-12);
    const auto q12 = poisson_pmf(k.lambda_labelled, 0);
    EXPECT_NEAR(q12[0].to_double(), 0.4393464340812362, 1e-14);
    const auto tiny = poisson_pmf(Real(Rational(1, 1000000), 256), 2);
    EXPECT_NEAR(tiny[0].to_double(), 1.0, 2e-6);
    EXPECT_THROW((void)poisson_pmf(Real(0, 256), 3), std::invalid_argument);
}

TEST(TvDistance, Basics)
{
    const AsymptoticConstants k = constants(256);
    Pmf p;
    p.masses = rationals({{1, 4}, {1, 2}, {1, 4}});
    std::vector<Real> same{Real(Rational(1, 4), 256), Real(Rational(1, 2), 256), Real(Rational(1, 4), 256)};
    EXPECT_EQ(tv_distance(p, same), Real(0, 256));

    Pmf point;
    point.masses = rationals({{1, 1}});
    const auto q = poisson_pmf(k.lambda_unlabelled, 60);
    const Real expected = Real(1, 256) - k.exp_neg_pi2_over_6;
    EXPECT_NEAR(tv_distance(point, q).to_double(), expected.to_double(), 1e-15);
    EXPECT_NEAR(tv_distance(point, q).to_double(), 0.806975, 1e-6);

    // truncated reference: the missing tail counts as discrepancy
    const auto q0 = poisson_pmf(k.lambda_unlabelled, 0);
    EXPECT_NEAR(tv_distance(point, q0).to_double(), expected.to_double(), 1e-15);

    // defect counts as pure discrepancy
    Pmf half;
    half.masses = rationals({{1, 2}, {1, 4}});
    half.defect = Rational(1, 4);
    std::vector<Real> ref{Real(Rational(1, 2), 256), Real(Rational(1, 4), 256), Real(Rational(1, 4), 256)};
    EXPECT_NEAR(tv_distance(half, ref).to_double(), 0.25, 1e-15);

    std::vector<Real> too_short{Real(1, 256)};
    EXPECT_THROW((void)tv_distance(p, too_short), std::invalid_argument);
}

TEST(TvDistance, DecreasesTowardPoissonLimits)
{
    const CountTable &t = table200();
    const AsymptoticConstants k = constants(256);
    for (Model m : {Model::unlabelled, Model::labelled}) {
        const Real lambda = poisson_mean(m, k);
        Real prev(256);
        bool first = true;
        for (std::size_t n : {50U, 100U, 200U}) {
            const Real d = tv_distance(pair_pmf(m, n, t), poisson_pmf(lambda, n));
            if (!first) {
                EXPECT_LT(d, prev) << to_string(m) << ' ' << n;
            }
            prev = d;
            first = false;
        }
    }
}
