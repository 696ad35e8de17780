#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "hspline/harness.hpp"

using namespace hspline;

TEST_CASE("config parsing") {
    std::stringstream js(R"({
        "n": 2, "lambda": 4, "c": 0.5, "l_const": 2.0, "b0": 2.0,
        "delta_grid": [0.01, 0.005],
        "seed": 77, "source_count": 12, "eval_resolution": 30,
        "output": "out.csv"
    })");
    const ExperimentConfig cfg = load_config(js);
    CHECK(cfg.n == 2);
    CHECK(cfg.lambda == 4);
    CHECK(cfg.c == 0.5);
    CHECK(cfg.l_const == 2.0);
    CHECK(cfg.b0 == 2.0);
    CHECK(cfg.delta_grid == std::vector<double>{0.01, 0.005});
    CHECK(cfg.seed == 77);
    CHECK(cfg.source_count == 12);
    CHECK(cfg.eval_resolution == 30);
    CHECK(cfg.output == "out.csv");

    std::stringstream js_auto(R"({"n": 2, "lambda": 2,
        "delta_auto": {"count": 5, "ratio": 4.0}})");
    const ExperimentConfig cfg2 = load_config(js_auto);
    CHECK(cfg2.delta_grid.empty());
    CHECK(cfg2.delta_auto_count == 5);
    CHECK(cfg2.delta_auto_ratio == 4.0);
}

TEST_CASE("auto delta grid") {
    const NewBoundConstants nb = new_constants(KernelParams(2, 2, 1.0), 1.0);
    const auto grid = auto_delta_grid(nb, 8, 5.0);
    REQUIRE(grid.size() == 8);
    CHECK(grid.front() == doctest::Approx(nb.delta_max).epsilon(1e-15));
    CHECK(grid.back() == doctest::Approx(nb.delta_max / 5.0).epsilon(1e-12));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(grid[i] < grid[i - 1]);
        CHECK(grid[i] / grid[i - 1] ==
              doctest::Approx(grid[1] / grid[0]).epsilon(1e-12));  // geometric
    }
}

TEST_CASE("fit_decay recovers planted models") {
    const double ln_omega = std::log(0.983247);
    std::vector<ConvergenceRecord> records;
    for (double delta : {0.01, 0.008, 0.006, 0.005, 0.004}) {
        ConvergenceRecord r;
        r.delta = delta;
        r.max_error = 2.5 * std::exp(ln_omega / delta);
        records.push_back(r);
    }
    const DecayFit f = fit_decay(records);
    CHECK(f.slope == doctest::Approx(ln_omega).epsilon(1e-9));
    CHECK(std::exp(f.intercept) == doctest::Approx(2.5).epsilon(1e-9));
    for (double res : f.residuals) CHECK(std::abs(res) <= 1e-9);

    // planted faster decay: omega^2 gives twice the slope
    for (auto& r : records) r.max_error = std::exp(2.0 * ln_omega / r.delta);
    CHECK(fit_decay(records).slope == doctest::Approx(2.0 * ln_omega).epsilon(1e-9));
    CHECK(fit_decay(records).slope <= ln_omega);

    // all-zero errors: below noise floor
    for (auto& r : records) r.max_error = 0.0;
    CHECK(fit_decay(records).below_noise_floor);

    records.resize(2);
    records[0].max_error = 1.0;
    records[1].max_error = 0.5;
    CHECK_THROWS_AS(fit_decay(records), std::invalid_argument);
}

TEST_CASE("convergence run and CSV round trip") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.lambda = 2;
    cfg.seed = 42;
    cfg.delta_auto_count = 4;
    cfg.delta_auto_ratio = 2.0;
    cfg.eval_resolution = 20;

    const auto records = run_convergence(cfg);
    REQUIRE(records.size() == 4);

    const NewBoundConstants nb = new_constants(KernelParams(2, 2, 1.0), 1.0);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        CHECK(r.fit_ok);
        CHECK(r.max_error >= 0.0);
        // node_count = dim P_{k-1}^2 = binom(k+1, 2)
        CHECK(r.node_count == (r.k + 1) * r.k / 2);
        // internal consistency with the bounds module
        CHECK(r.bound_value ==
              doctest::Approx(error_bound(nb, r.delta, r.seminorm)).epsilon(1e-12));
        if (i > 0) CHECK(records[i].delta < records[i - 1].delta);
    }

    std::stringstream csv;
    write_convergence_csv(csv, records, cfg);
    const auto parsed = read_convergence_csv(csv);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].delta == records[i].delta);  // 17 significant digits round-trip
        CHECK(parsed[i].k == records[i].k);
        CHECK(parsed[i].node_count == records[i].node_count);
        CHECK(parsed[i].max_error == records[i].max_error);
        CHECK(parsed[i].bound_value == records[i].bound_value);
        CHECK(parsed[i].seminorm == records[i].seminorm);
        CHECK(parsed[i].condition_estimate == records[i].condition_estimate);
    }
}

TEST_CASE("convergence runs are deterministic") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.lambda = 2;
    cfg.seed = 7;
    cfg.delta_auto_count = 3;
    cfg.delta_auto_ratio = 2.0;
    cfg.eval_resolution = 15;

    std::stringstream a, b;
    write_convergence_csv(a, run_convergence(cfg), cfg);
    write_convergence_csv(b, run_convergence(cfg), cfg);
    CHECK(a.str() == b.str());
}

TEST_CASE("fill distance column") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.lambda = 2;
    cfg.delta_auto_count = 2;
    cfg.delta_auto_ratio = 2.0;
    cfg.eval_resolution = 15;
    cfg.report_fill_distance = true;

    const auto records = run_convergence(cfg);
    for (const auto& r : records) {
        CHECK(r.fill_distance > 0.0);
        // delta is "in spirit" the fill distance: same order of magnitude
        CHECK(r.fill_distance < 5.0 * r.delta);
    }

    std::stringstream csv;
    write_convergence_csv(csv, records, cfg);
    CHECK(csv.str().find("fill_distance") != std::string::npos);
    const auto parsed = read_convergence_csv(csv);
    CHECK(parsed[0].fill_distance == records[0].fill_distance);
}

TEST_CASE("delta grid validation") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.lambda = 2;
    cfg.delta_grid = {1.0};  // far beyond delta_0
    CHECK_THROWS_AS(run_convergence(cfg), std::invalid_argument);
}
