#include "tenorlab/scenario.hpp"

#include <sstream>

#include "doctest.h"

using namespace tenorlab;

TEST_CASE("figure presets match the reference table") {
    const ScenarioConfig f1 = figure_preset(1);
    CHECK(f1.experiment == "sweep");
    CHECK(f1.curve == 1);
    CHECK(f1.vol == "lambda1");
    CHECK(f1.t_star == 10.0);
    CHECK(f1.method == "1");

    CHECK(figure_preset(2).method == "2");
    const ScenarioConfig f3 = figure_preset(3);
    CHECK(f3.curve == 2);
    CHECK(f3.window_lo == 4.0);
    CHECK(f3.window_hi == 6.0);

    const ScenarioConfig f4 = figure_preset(4);
    CHECK(f4.experiment == "dynamics");
    CHECK(f4.curve == 3);
    CHECK(f4.t_star == 2.25);
    CHECK(f4.fixed_maturity == 1.8125);
    CHECK(f4.fixed_ttm == 0.3125);
    CHECK(figure_preset(5).method == "2");

    const ScenarioConfig f6 = figure_preset(6);
    CHECK(f6.experiment == "impvol");
    CHECK(f6.curve == 3);
    CHECK(f6.vol == "lambda2");
    CHECK(f6.t_star == 4.25);
    CHECK(f6.delta == 0.25);
    CHECK(figure_preset(7).method == "2");

    CHECK_THROWS_AS(figure_preset(8), ConfigError);
}

TEST_CASE("config parse, serialize and round trip") {
    for (int fig = 1; fig <= 7; ++fig) {
        const ScenarioConfig cfg = figure_preset(fig);
        std::stringstream buf(serialize_config(cfg));
        CHECK(parse_config(buf) == cfg);
    }

    std::stringstream custom(
        "# comment line\n"
        "experiment = impvol\n"
        "curve = 3\n"
        "vol = lambda2\n"
        "t_star = 4.25\n"
        "\n"
        "paths = 250000   # inline comment\n"
        "seed = 99\n"
        "method = 1\n"
        "sweep_start = 2.0\n");
    const ScenarioConfig cfg = parse_config(custom);
    CHECK(cfg.paths == 250000);
    CHECK(cfg.seed == 99);
    CHECK(cfg.sweep_start == 2.0);
    std::stringstream again(serialize_config(cfg));
    CHECK(parse_config(again) == cfg);
}

TEST_CASE("figure key seeds the preset, later keys override") {
    std::stringstream buf(
        "figure = 6\n"
        "paths = 1000\n"
        "method = 2\n");
    const ScenarioConfig cfg = parse_config(buf);
    CHECK(cfg.curve == 3);
    CHECK(cfg.vol == "lambda2");
    CHECK(cfg.paths == 1000);
    CHECK(cfg.method == "2");
}

TEST_CASE("config diagnostics name the line and field") {
    std::stringstream missing_eq("experiment impvol\n");
    CHECK_THROWS_WITH_AS(parse_config(missing_eq), doctest::Contains("line 1"), ConfigError);

    std::stringstream bad_value("\npaths = many\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_value), doctest::Contains("line 2"), ConfigError);

    std::stringstream unknown("paths = 100\nfrobnicate = 1\n");
    CHECK_THROWS_WITH_AS(parse_config(unknown), doctest::Contains("frobnicate"), ConfigError);

    std::stringstream bad_method("method = 7\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_method), doctest::Contains("method"), ConfigError);

    std::stringstream bad_exp("experiment = warp\n");
    CHECK_THROWS_AS(parse_config(bad_exp), ConfigError);

    ScenarioConfig dyn = figure_preset(4);
    dyn.fixed_maturity = -1.0;
    CHECK_THROWS_WITH_AS(validate_config(dyn), doctest::Contains("fixed_maturity"), ConfigError);
}
