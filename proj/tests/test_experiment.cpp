#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "maxseg/experiment.hpp"

using namespace maxseg;

TEST_CASE("geometric ladder") {
    auto ms = geometric_ladder(100, 5000, 10);
    CHECK(ms.size() == 10);
    CHECK(ms.front() == 100);
    CHECK(ms.back() == 5000);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i] > ms[i - 1]);

    CHECK_THROWS_AS(geometric_ladder(3, 100, 5), std::invalid_argument);
    CHECK_THROWS_AS(geometric_ladder(10, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(geometric_ladder(100, 10, 5), std::invalid_argument);
}

TEST_CASE("log-log fit on exact power laws") {
    std::vector<double> xs, half, flat;
    for (double x : {10.0, 20.0, 40.0, 80.0, 160.0}) {
        xs.push_back(x);
        half.push_back(std::sqrt(x));
        flat.push_back(3.0);
    }
    auto f1 = fit_loglog_slope(xs, half);
    CHECK(std::abs(f1.slope - 0.5) <= 1e-12);
    CHECK(f1.r2 == doctest::Approx(1.0));
    auto f2 = fit_loglog_slope(xs, flat);
    CHECK(std::abs(f2.slope) <= 1e-12);

    std::vector<double> bad{1.0, -2.0, 3.0};
    CHECK_THROWS_AS(fit_loglog_slope(xs, bad), std::invalid_argument);
    std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(fit_loglog_slope(two, two), std::invalid_argument);
}

TEST_CASE("analyze_resolution fills a consistent record") {
    std::set<std::string> checks{kCheckNames.begin(), kCheckNames.end()};
    auto rec = analyze_resolution(ShapeSpec::disk(Rational(1)), 16, checks, true);
    CHECK(rec.m == 16);
    CHECK(rec.n_points > 0);
    CHECK(rec.n_e > 0);
    CHECK(rec.per_l1 > 0);
    CHECK(rec.ms_count > 0);
    CHECK(rec.ms_len_min <= rec.ms_len_max);
    CHECK(rec.n_0 + rec.n_1 + rec.n_2 == rec.n_e);
    for (bool b : rec.checks_passed) CHECK(b);
}

TEST_CASE("run_experiment validates its configuration") {
    ExperimentConfig config;
    config.shape = ShapeSpec::disk(Rational(1));
    config.m_min = 8;
    config.m_max = 16;
    config.steps = 3;

    ExperimentConfig bad = config;
    bad.checks = {"prop9"};
    CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
    bad = config;
    bad.oracle_max_m = 100;
    CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
    bad = config;
    bad.jitters.clear();
    CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
    bad = config;
    bad.m_min = 20;  // empty ladder
    CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("records per (m, jitter), ascending m, oracle-checked") {
    ExperimentConfig config;
    config.shape = ShapeSpec::disk(Rational(1));
    config.m_min = 8;
    config.m_max = 32;
    config.steps = 3;
    config.oracle_max_m = 32;
    auto records = run_experiment(config);
    CHECK(records.size() == 3 * config.jitters.size());
    for (std::size_t i = 1; i < records.size(); ++i)
        CHECK(records[i].m >= records[i - 1].m);
}

TEST_CASE("CSV round-trips records exactly and deterministically") {
    ExperimentConfig config;
    config.shape = ShapeSpec::ellipse(Rational(1), Rational(3, 5));
    config.m_min = 8;
    config.m_max = 20;
    config.steps = 3;
    auto records = run_experiment(config);
    std::string csv = to_csv(records);
    CHECK(csv.find("\r") == std::string::npos);  // LF endings only
    auto parsed = parse_csv(csv);
    CHECK(parsed == records);
    CHECK(to_csv(parsed) == csv);

    auto records2 = run_experiment(config);
    CHECK(to_csv(records2) == csv);
}

TEST_CASE("run_experiment writes the CSV file it reports") {
    ExperimentConfig config;
    config.shape = ShapeSpec::disk(Rational(1));
    config.m_min = 8;
    config.m_max = 12;
    config.steps = 2;
    config.out_path = "test_experiment_out.csv";
    auto records = run_experiment(config);
    std::ifstream in(config.out_path, std::ios::binary);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == to_csv(records));
    std::remove(config.out_path.c_str());
}

TEST_CASE("report_bounds recovers synthetic exponents and emits verdicts") {
    std::vector<ExperimentRecord> fake;
    for (Int m : {100, 200, 400, 800, 1600, 3200}) {
        ExperimentRecord r;
        r.m = m;
        r.n_e = static_cast<Int>(std::llround(std::pow(static_cast<double>(m), 2.0 / 3.0)));
        r.ms_len_min = static_cast<Int>(std::llround(2.0 * std::cbrt(static_cast<double>(m))));
        r.ms_len_mean = 3.0 * std::cbrt(static_cast<double>(m));
        r.halftangent_len_min = r.ms_len_min;
        r.n_1 = m / 10;
        r.n_22 = m / 10;
        r.curv_err_mean = 0.1;
        fake.push_back(r);
    }
    auto rep = report_bounds(fake);
    CHECK(rep.ne_fit.slope == doctest::Approx(2.0 / 3.0).epsilon(0.02));
    CHECK(rep.ms_mean_fit.slope == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(rep.hypothesis1_refuted);       // cbrt growth is below sqrt
    CHECK(!rep.curvature_convergent);     // flat 0.1 series never dips below 0.02
    CHECK(rep.lines.size() >= 5);

    std::vector<ExperimentRecord> few(fake.begin(), fake.begin() + 2);
    CHECK_THROWS_AS(report_bounds(few), std::invalid_argument);
}

TEST_CASE("synthetic exact two-thirds exponent is recovered to 1e-9") {
    std::vector<double> xs, ys;
    for (double m : {100.0, 300.0, 900.0, 2700.0}) {
        xs.push_back(m);
        ys.push_back(std::pow(m, 2.0 / 3.0));
    }
    auto fit = fit_loglog_slope(xs, ys);
    CHECK(std::abs(fit.slope - 2.0 / 3.0) <= 1e-9);
}
