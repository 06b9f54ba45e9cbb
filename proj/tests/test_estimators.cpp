#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxseg/estimators.hpp"
#include "maxseg/shape.hpp"
#include "test_util.hpp"

using namespace maxseg;

TEST_CASE("circumcircle radius examples") {
    CHECK(circumcircle_radius({0, 1}, {1, 0}, {-1, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(circumcircle_radius({0, 0}, {4, 0}, {0, 3}) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::isinf(circumcircle_radius({0, 0}, {1, 1}, {2, 2})));
    CHECK_THROWS_AS(circumcircle_radius({0, 0}, {0, 0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("circumcircle radius is permutation symmetric") {
    LatticePoint a{3, 7}, b{-11, 2}, c{5, -6};
    double r0 = circumcircle_radius(a, b, c);
    for (auto [p, q, s] : {std::array{a, c, b}, std::array{b, a, c}, std::array{b, c, a},
                           std::array{c, a, b}, std::array{c, b, a}}) {
        double r = circumcircle_radius(p, q, s);
        CHECK(std::abs(r - r0) / r0 <= 1e-12);
    }
}

TEST_CASE("circumcircle radius scales exactly with integer dilation") {
    LatticePoint a{0, 1}, b{4, 2}, c{7, -1};
    double r1 = circumcircle_radius(a, b, c);
    for (Int s : {2, 4, 8}) {  // power-of-two scaling is exact in binary floating point
        double rs = circumcircle_radius({s * a.x, s * a.y}, {s * b.x, s * b.y},
                                        {s * c.x, s * c.y});
        CHECK(rs == static_cast<double>(s) * r1);
    }
    for (Int s : {3, 5, 7}) {
        double rs = circumcircle_radius({s * a.x, s * a.y}, {s * b.x, s * b.y},
                                        {s * c.x, s * c.y});
        CHECK(std::abs(rs - s * r1) / (s * r1) <= 1e-12);
    }
}

TEST_CASE("half tangents on an open straight run span the run") {
    Contour open = Contour::make({0, 0}, "00000", false);
    auto [q, r] = half_tangents(open, 2);
    CHECK(q == 0);
    CHECK(r == 5);
}

TEST_CASE("half tangents bracket the index and match front/back on a disk") {
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1)), 10));
    for (Int i = 0; i < c.size(); i += 7) {
        auto [q, r] = half_tangents(c, i);
        CHECK(q <= i);
        CHECK(i <= r);
        CHECK(q == back(c, i));
        CHECK(r == front(c, i));
    }
}

TEST_CASE("curvature is zero on straight configurations") {
    Contour open = Contour::make({0, 0}, "00000", false);
    auto est = curvature_circumcircle(open, 2, 4);
    CHECK(est.kappa_hat == 0.0);
    CHECK(std::isinf(est.radius_grid));
}

TEST_CASE("disk curvature estimates cluster near 1") {
    Int m = 50;
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1)), m));
    auto table = front_back_table(c, maximal_segments(c));
    auto est = curvature_circumcircle(c, table, 0, m);
    CHECK(est.kappa_hat == doctest::Approx(1.0).epsilon(0.35));
    auto direct = curvature_circumcircle(c, 0, m);
    CHECK(direct.kappa_hat == est.kappa_hat);
}

TEST_CASE("error stats vanish when the truth equals the estimator") {
    Int m = 20;
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1)), m));
    auto table = front_back_table(c, maximal_segments(c));
    std::map<std::pair<Int, Int>, double> kappa;
    for (Int i = 0; i < c.size(); ++i) {
        LatticePoint p = c.point(i);
        kappa[{p.x, p.y}] = curvature_circumcircle(c, table, i, m).kappa_hat;
    }
    auto truth = [&](double x, double y) {
        return kappa.at({std::llround(x * m), std::llround(y * m)});
    };
    auto st = error_stats(c, table, m, truth);
    CHECK(st.m == m);
    CHECK(st.mean_abs_err == 0.0);
    CHECK(st.std_abs_err == 0.0);
}

TEST_CASE("half-tangent lengths never exceed the longest maximal segment") {
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1), Rational(1, 3)), 24));
    auto segs = maximal_segments(c);
    auto table = front_back_table(c, segs);
    Int max_len = 0, min_len = c.size();
    for (const auto& s : segs) {
        max_len = std::max(max_len, s.length());
        min_len = std::min(min_len, s.length());
    }
    Int min_front = c.size();
    for (Int i = 0; i < c.size(); ++i) {
        CHECK(table.dist_front[static_cast<std::size_t>(i)] <= max_len);
        CHECK(table.dist_back[static_cast<std::size_t>(i)] <= max_len);
        min_front = std::min(min_front, table.dist_front[static_cast<std::size_t>(i)]);
    }
    // The front half-tangent at the first index of the smallest maximal
    // segment equals that segment, so the minimum cannot exceed it.
    CHECK(min_front <= min_len);
}

TEST_CASE("ellipse true curvature matches closed forms at the axes") {
    auto fn = true_curvature_function(ShapeSpec::ellipse(Rational(2), Rational(1)));
    // at (rx, 0): kappa = rx/ry^2; at (0, ry): kappa = ry/rx^2
    CHECK(fn(2, 0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fn(0, 1) == doctest::Approx(0.25).epsilon(1e-9));
    auto disk = true_curvature_function(ShapeSpec::disk(Rational(2)));
    CHECK(disk(0.3, -0.1) == doctest::Approx(0.5));
}
