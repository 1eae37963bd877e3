#include "tenorlab/volatility.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "tenorlab/rng.hpp"

using namespace tenorlab;
using tenorlab::testing::adaptive_simpson;

namespace {

double oracle_cov(const VolatilitySpec& vol, double Ta, double Tb, double s0, double s1) {
    return adaptive_simpson(
        [&](double s) {
            const auto a = vol.vol(s, Ta);
            const auto b = vol.vol(s, Tb);
            double dot = 0.0;
            for (std::size_t c = 0; c < a.size(); ++c) dot += a[c] * b[c];
            return dot;
        },
        s0, s1, 1e-12);
}

VolatilitySpec sample_piecewise() {
    // 2 time buckets x 2 maturity buckets, three factors
    return VolatilitySpec::piecewise_constant(
        {0.5}, {1.0},
        {{{0.2, 0.1, 0.05}, {0.15, 0.12, 0.02}}, {{0.25, 0.08, 0.04}, {0.1, 0.2, 0.01}}});
}

}  // namespace

TEST_CASE("flat and two-factor values") {
    const auto l1 = VolatilitySpec::lambda1();
    CHECK(l1.dim() == 1);
    CHECK(l1.vol(0.3, 5.0)[0] == doctest::Approx(0.3).epsilon(1e-15));

    const auto l2 = VolatilitySpec::lambda2();
    CHECK(l2.dim() == 2);
    const auto at_fix = l2.vol(1.0, 1.0);
    CHECK(at_fix[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(at_fix[1] == doctest::Approx(0.1).epsilon(1e-15));
    const auto one_year = l2.vol(0.0, 1.0);
    CHECK(one_year[0] == doctest::Approx(0.269597378470333).epsilon(1e-12));
    CHECK(one_year[1] == doctest::Approx(0.099004983374917).epsilon(1e-12));

    CHECK_THROWS_AS(l2.vol(1.5, 1.0), std::domain_error);
}

TEST_CASE("integrated covariance closed forms") {
    const auto l1 = VolatilitySpec::lambda1();
    CHECK(l1.integrated_cov(3.0, 7.0, 0.0, 1.0) == doctest::Approx(0.09).epsilon(1e-15));
    CHECK(l1.integrated_cov(3.0, 7.0, 0.4, 0.4) == 0.0);

    const auto l2 = VolatilitySpec::lambda2();
    CHECK(l2.integrated_var(1.0, 0.0, 1.0) == doctest::Approx(0.189473946797825).epsilon(1e-12));
    CHECK(std::sqrt(l2.integrated_var(1.0, 0.0, 1.0)) ==
          doctest::Approx(0.435286051692246).epsilon(1e-12));
    CHECK(l2.integrated_var(1.0, 0.0, 0.0) == 0.0);

    CHECK_THROWS_AS(l2.integrated_cov(1.0, 2.0, 0.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(l2.integrated_cov(1.0, 2.0, 0.8, 0.2), std::domain_error);
}

TEST_CASE("closed forms agree with adaptive Simpson on random windows") {
    CounterRng rng(99, 7);
    const auto l2 = VolatilitySpec::lambda2();
    const auto pw = sample_piecewise();
    for (int i = 0; i < 100; ++i) {
        const double Ta = 0.5 + 4.0 * rng.next_uniform();
        const double Tb = 0.5 + 4.0 * rng.next_uniform();
        const double hi = std::min(Ta, Tb);
        double s0 = hi * rng.next_uniform();
        double s1 = hi * rng.next_uniform();
        if (s0 > s1) std::swap(s0, s1);
        for (const VolatilitySpec* v : {&l2, &pw}) {
            const double closed = v->integrated_cov(Ta, Tb, s0, s1);
            const double quad = oracle_cov(*v, Ta, Tb, s0, s1);
            CHECK(closed == doctest::Approx(quad).epsilon(1e-10));
        }
    }
}

TEST_CASE("covariance symmetry, additivity and Cauchy-Schwarz") {
    CounterRng rng(4, 2);
    const auto l2 = VolatilitySpec::lambda2();
    for (int i = 0; i < 100; ++i) {
        const double Ta = 0.5 + 4.0 * rng.next_uniform();
        const double Tb = 0.5 + 4.0 * rng.next_uniform();
        const double hi = std::min(Ta, Tb);
        const double s0 = 0.3 * hi * rng.next_uniform();
        const double sm = s0 + (hi - s0) * 0.5 * rng.next_uniform();
        const double s1 = sm + (hi - sm) * rng.next_uniform();
        CHECK(l2.integrated_cov(Ta, Tb, s0, s1) ==
              doctest::Approx(l2.integrated_cov(Tb, Ta, s0, s1)).epsilon(1e-14));
        CHECK(l2.integrated_cov(Ta, Tb, s0, s1) ==
              doctest::Approx(l2.integrated_cov(Ta, Tb, s0, sm) +
                              l2.integrated_cov(Ta, Tb, sm, s1)).epsilon(1e-13));
        const double cov = l2.integrated_cov(Ta, Tb, s0, s1);
        const double va = l2.integrated_var(Ta, s0, s1);
        const double vb = l2.integrated_var(Tb, s0, s1);
        CHECK(cov * cov <= va * vb * (1.0 + 1e-12));
    }
}

TEST_CASE("piecewise-constant lookup and component variances") {
    const auto pw = sample_piecewise();
    CHECK(pw.dim() == 3);
    CHECK(pw.vol(0.2, 0.8)[0] == doctest::Approx(0.2));   // bucket (0,0)
    CHECK(pw.vol(0.7, 0.8)[1] == doctest::Approx(0.08));  // bucket (1,0)
    CHECK(pw.vol(0.7, 1.5)[1] == doctest::Approx(0.2));   // bucket (1,1)

    // component variances sum to the total variance
    const auto l1 = VolatilitySpec::lambda1();
    const auto l2 = VolatilitySpec::lambda2();
    for (const VolatilitySpec* v : {&pw, &l2, &l1}) {
        std::vector<double> comp(static_cast<std::size_t>(v->dim()));
        v->integrated_component_var(1.7, 0.2, 1.3, comp);
        double total = 0.0;
        for (double c : comp) total += c;
        CHECK(total == doctest::Approx(v->integrated_var(1.7, 0.2, 1.3)).epsilon(1e-14));
    }
}

TEST_CASE("piecewise-constant construction is validated") {
    CHECK_THROWS_AS(VolatilitySpec::piecewise_constant({1.0, 0.5}, {}, {{{0.1}}, {{0.1}}, {{0.1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VolatilitySpec::piecewise_constant({0.5}, {}, {{{0.1}}, {{0.1, 0.2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VolatilitySpec::flat(-0.1), std::invalid_argument);
}
