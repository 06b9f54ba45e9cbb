// Multigrid experiment harness: digitizes a convex shape over a geometric
// resolution ladder, runs the maximal-segment / polygon analysis with the
// selected structural checks, writes one CSV row per (resolution, jitter),
// and prints the exponent-fit summary.
//
// Exit status: 0 all checks passed, 1 check violation, 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "maxseg/experiment.hpp"

namespace {

maxseg::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return {num, den};
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return {std::stoll(digits), den};
    }
    return {std::stoll(s), 1};
}

std::pair<maxseg::Rational, maxseg::Rational> parse_rational_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected X,Y with rational components: " + s);
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal-segment multigrid experiments on digitized convex shapes"};

    std::string shape_kind = "disk";
    std::string radius = "1";
    std::string radius2;
    std::string center = "0,0";
    maxseg::Int m_min = 100, m_max = 5000, steps = 10;
    std::string checks_list = "prop4,prop5,thm2,thm3,lemma1,cdp";
    maxseg::Int oracle_max_m = 0;
    std::string out_file;
    std::vector<std::string> jitters;

    app.add_option("--shape", shape_kind, "disk or ellipse")
        ->check(CLI::IsMember({"disk", "ellipse"}));
    app.add_option("--radius", radius, "radius (disk) or x-radius (ellipse), rational");
    app.add_option("--radius2", radius2, "y-radius for an ellipse, rational");
    app.add_option("--center", center, "center X,Y with rational components");
    app.add_option("--m-min", m_min, "smallest resolution (>= 4)");
    app.add_option("--m-max", m_max, "largest resolution");
    app.add_option("--steps", steps, "ladder size (>= 2)");
    app.add_option("--checks", checks_list,
                   "comma list from prop4,prop5,thm2,thm3,lemma1,cdp (empty to disable)");
    app.add_option("--oracle-max-m", oracle_max_m,
                   "cross-check maximal segments against the brute-force oracle up to this m");
    app.add_option("--out", out_file, "CSV output path");
    app.add_option("--jitter", jitters,
                   "rational center offset X,Y; repeatable (default 0,0 and 1/3,1/7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        maxseg::ExperimentConfig config;
        auto [cx, cy] = parse_rational_pair(center);
        maxseg::Rational r = parse_rational(radius);
        if (shape_kind == "disk") {
            if (!radius2.empty()) throw std::invalid_argument("--radius2 needs --shape ellipse");
            config.shape = maxseg::ShapeSpec::disk(r, cx, cy);
        } else {
            if (radius2.empty()) throw std::invalid_argument("ellipse needs --radius2");
            config.shape = maxseg::ShapeSpec::ellipse(r, parse_rational(radius2), cx, cy);
        }
        config.m_min = m_min;
        config.m_max = m_max;
        config.steps = steps;
        config.oracle_max_m = oracle_max_m;
        config.out_path = out_file;
        config.checks.clear();
        std::size_t pos = 0;
        while (pos <= checks_list.size() && !checks_list.empty()) {
            std::size_t next = checks_list.find(',', pos);
            std::string tok = checks_list.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            if (!tok.empty()) config.checks.insert(tok);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (!jitters.empty()) {
            config.jitters.clear();
            for (const auto& j : jitters) config.jitters.push_back(parse_rational_pair(j));
        }

        auto records = maxseg::run_experiment(config);
        std::cout << records.size() << " records";
        if (!out_file.empty()) std::cout << " -> " << out_file;
        std::cout << "\n";
        if (records.size() >= 3) {
            auto report = maxseg::report_bounds(records);
            for (const auto& line : report.lines) std::cout << line << "\n";
        }
        return 0;
    } catch (const maxseg::CheckViolation& v) {
        std::cerr << v.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
