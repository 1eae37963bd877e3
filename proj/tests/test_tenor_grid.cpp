#include "tenorlab/tenor_grid.hpp"

#include "doctest.h"

using namespace tenorlab;

TEST_CASE("eta definition on the quarterly grid") {
    const TenorGrid grid(0.0, 0.25, 40);
    CHECK(grid.eta(0.3) == 2);    // T_1 = 0.25 < 0.3 <= T_2
    CHECK(grid.eta(0.25) == 1);   // boundary: T_1 is not < 0.25
    CHECK(grid.eta(0.0) == 0);    // empty max at the origin
    CHECK(grid.next_tenor_date(0.3) == doctest::Approx(0.5));
    CHECK(grid.next_tenor_date(0.5) == doctest::Approx(0.5));
    CHECK(grid.next_tenor_date(0.0) == doctest::Approx(0.0));
}

TEST_CASE("eta is the period index on every half-open interval") {
    const TenorGrid grid(0.0, 0.25, 8);
    for (int i = 0; i < 8; ++i) {
        for (int k = 1; k <= 20; ++k) {
            const double t = grid.date(i) + 0.25 * k / 20.0;
            if (t >= grid.horizon() - 1e-9) continue;  // eta is defined on [T_0, T_n)
            CHECK(grid.eta(t) == i + 1);
        }
    }
    // nondecreasing, and the gap to the next date stays inside [0, delta)
    int prev = 0;
    for (double t = 0.0; t < 2.0; t += 0.013) {
        const int e = grid.eta(t);
        CHECK(e >= prev);
        prev = e;
        CHECK(grid.date(e) - t >= 0.0);
        CHECK(grid.date(e) - t < 0.25);
    }
}

TEST_CASE("tenor-date classification uses the 1e-12 tolerance") {
    const TenorGrid grid(0.0, 0.25, 8);
    CHECK(grid.eta(0.25 + 5e-13) == 1);  // snaps to the date
    CHECK(grid.eta(0.25 - 5e-13) == 1);
    CHECK(grid.eta(0.25 + 1e-9) == 2);   // genuinely past it
    CHECK(grid.is_tenor_date(0.5));
    CHECK(!grid.is_tenor_date(0.5 + 1e-9));
    CHECK(grid.index_of(1.75) == 7);
    CHECK_THROWS_AS(grid.index_of(1.8), std::domain_error);
}

TEST_CASE("domain ends are enforced") {
    const TenorGrid grid(0.0, 0.25, 8);
    CHECK_THROWS_AS(grid.eta(2.0), std::domain_error);   // t = T_n rejected
    CHECK_THROWS_AS(grid.eta(2.5), std::domain_error);
    CHECK_THROWS_AS(grid.eta(-0.1), std::domain_error);
    CHECK(grid.position(2.0).on_grid);                   // maturities may sit at the horizon
    CHECK(grid.position(2.0).eta == 8);
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(TenorGrid(0.0, -0.25, 8), std::invalid_argument);
    CHECK_THROWS_AS(TenorGrid(0.0, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(TenorGrid(0.0, 0.25, 1), std::invalid_argument);
    const TenorGrid g = TenorGrid::from_horizon(0.0, 0.25, 4.25);
    CHECK(g.periods() == 17);
    CHECK(g.horizon() == doctest::Approx(4.25));
    CHECK_THROWS_AS(TenorGrid::from_horizon(0.0, 0.25, 4.30), std::invalid_argument);
}
