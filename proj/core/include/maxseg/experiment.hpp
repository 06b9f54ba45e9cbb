#pragma once

#include <array>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "maxseg/cdp.hpp"
#include "maxseg/contour.hpp"
#include "maxseg/dss.hpp"
#include "maxseg/estimators.hpp"
#include "maxseg/shape.hpp"

namespace maxseg {

/// Check tokens, in CSV column order.
inline constexpr std::array<const char*, 6> kCheckNames = {"prop4", "prop5", "thm2",
                                                           "thm3",  "lemma1", "cdp"};

struct CheckViolation : std::runtime_error {
    std::string check;
    Int m;
    CheckViolation(std::string check_name, Int m_value)
        : std::runtime_error("check " + check_name + " failed at m=" + std::to_string(m_value)),
          check(std::move(check_name)),
          m(m_value) {}
};

struct ExperimentConfig {
    ShapeSpec shape;
    Int m_min = 100;
    Int m_max = 5000;
    Int steps = 10;
    std::set<std::string> checks{kCheckNames.begin(), kCheckNames.end()};
    Int oracle_max_m = 0;  // 0 disables the oracle cross-check
    std::string out_path;  // empty: no CSV file
    std::vector<std::pair<Rational, Rational>> jitters{{Rational(0), Rational(0)},
                                                       {Rational(1, 3), Rational(1, 7)}};
};

/// One row of the experiment CSV. Floating fields are quantized to 12
/// significant digits on construction so the CSV round-trips records
/// exactly.
struct ExperimentRecord {
    Int m = 0;
    Int n_points = 0;
    Int n_e = 0;
    Int per_l1 = 0;
    Int ms_count = 0;
    Int ms_len_min = 0;
    double ms_len_mean = 0.0;
    Int ms_len_max = 0;
    Int n_0 = 0, n_1 = 0, n_2 = 0, n_22 = 0;
    double curv_err_mean = 0.0;
    double curv_err_std = 0.0;
    Int halftangent_len_min = 0;
    double halftangent_len_mean = 0.0;
    std::array<bool, 6> checks_passed{true, true, true, true, true, true};

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Geometric resolution ladder between m_min and m_max (inclusive),
/// deduplicated ascending.
std::vector<Int> geometric_ladder(Int m_min, Int m_max, Int steps);

/// Full pipeline at one resolution: digitize, trace, maximal segments,
/// polygon analysis, labeling, estimators, requested checks. Throws
/// CheckViolation when an enabled check fails, and compares against the
/// brute-force segment oracle when run_oracle is set.
ExperimentRecord analyze_resolution(const ShapeSpec& shape, Int m,
                                    const std::set<std::string>& checks, bool run_oracle);

/// Runs the ladder for every jitter of the config (rows ascending in m,
/// jitters in list order within one m) and writes the CSV when out_path is
/// set. Identical configs produce byte-identical CSV.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

std::string to_csv(std::span<const ExperimentRecord> records);
std::vector<ExperimentRecord> parse_csv(std::string_view text);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
/// Least-squares line through (ln x, ln y). Needs >= 3 points, all
/// positive.
FitResult fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

struct BoundsReport {
    FitResult ne_fit;
    FitResult ms_min_fit;
    FitResult ms_mean_fit;
    FitResult halftangent_min_fit;
    double thm3_ratio_max = 0.0;  // max over m of n_e / ((n_1 + 2 n_22) ln m)
    bool hypothesis1_refuted = false;
    bool curvature_convergent = false;
    std::vector<std::string> lines;
};
/// Exponent fits and verdict lines over >= 3 records.
BoundsReport report_bounds(std::span<const ExperimentRecord> records);

}  // namespace maxseg
