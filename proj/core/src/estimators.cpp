#include "maxseg/estimators.hpp"

#include <cmath>
#include <limits>

namespace maxseg {

double circumcircle_radius(LatticePoint p, LatticePoint q, LatticePoint r) {
    if (p == q || q == r || p == r)
        throw std::invalid_argument("circumcircle_radius: coincident points");
    const Wide twice_area = cross(q - p, r - p);
    if (twice_area == 0) return std::numeric_limits<double>::infinity();
    const long double a2 = static_cast<long double>(squared_norm(q - p));
    const long double b2 = static_cast<long double>(squared_norm(r - q));
    const long double c2 = static_cast<long double>(squared_norm(p - r));
    const long double area2 = static_cast<long double>(twice_area < 0 ? -twice_area : twice_area);
    return static_cast<double>(std::sqrt(a2 * b2 * c2) / (2.0L * area2));
}

std::pair<Int, Int> half_tangents(const Contour& c, Int i) {
    return {back(c, i), front(c, i)};
}

namespace {

CurvatureEstimate estimate_from(const Contour& c, Int i, Int back_idx, Int front_idx, Int m) {
    CurvatureEstimate est;
    est.index = i;
    LatticePoint p = c.point(i);
    LatticePoint q = c.point(back_idx);
    LatticePoint r = c.point(front_idx);
    est.radius_grid = circumcircle_radius(p, q, r);
    est.kappa_hat = std::isinf(est.radius_grid) ? 0.0 : static_cast<double>(m) / est.radius_grid;
    return est;
}

}  // namespace

CurvatureEstimate curvature_circumcircle(const Contour& c, Int i, Int m) {
    if (m < 1) throw std::invalid_argument("curvature_circumcircle: resolution must be >= 1");
    return estimate_from(c, i, back(c, i), front(c, i), m);
}

CurvatureEstimate curvature_circumcircle(const Contour& c, const FrontBackTable& table, Int i,
                                         Int m) {
    if (m < 1) throw std::invalid_argument("curvature_circumcircle: resolution must be >= 1");
    Int iw = c.wrap(i);
    Int b = i - table.dist_back[static_cast<std::size_t>(iw)];
    Int f = i + table.dist_front[static_cast<std::size_t>(iw)];
    return estimate_from(c, i, b, f, m);
}

ErrorStats error_stats(const Contour& c, Int m, const CurvatureFn& true_curvature) {
    return error_stats(c, front_back_table(c, maximal_segments(c)), m, true_curvature);
}

ErrorStats error_stats(const Contour& c, const FrontBackTable& table, Int m,
                       const CurvatureFn& true_curvature) {
    const Int n = c.size();
    double sum = 0.0, sum2 = 0.0;
    for (Int i = 0; i < n; ++i) {
        CurvatureEstimate est = curvature_circumcircle(c, table, i, m);
        LatticePoint p = c.point(i);
        double truth = true_curvature(static_cast<double>(p.x) / static_cast<double>(m),
                                      static_cast<double>(p.y) / static_cast<double>(m));
        double err = std::abs(est.kappa_hat - truth);
        sum += err;
        sum2 += err * err;
    }
    ErrorStats st;
    st.m = m;
    st.mean_abs_err = sum / static_cast<double>(n);
    double var = sum2 / static_cast<double>(n) - st.mean_abs_err * st.mean_abs_err;
    st.std_abs_err = var > 0 ? std::sqrt(var) : 0.0;
    return st;
}

CurvatureFn true_curvature_function(const ShapeSpec& shape) {
    const double cx = boost::rational_cast<double>(shape.center_x);
    const double cy = boost::rational_cast<double>(shape.center_y);
    const double rx = boost::rational_cast<double>(shape.radius_x);
    const double ry = boost::rational_cast<double>(shape.radius_y);
    if (shape.kind == ShapeKind::disk || shape.radius_x == shape.radius_y) {
        const double kappa = 1.0 / rx;
        return [kappa](double, double) { return kappa; };
    }
    return [cx, cy, rx, ry](double x, double y) {
        const double px = x - cx, py = y - cy;
        // Parameter of the nearest boundary point, by Newton on the
        // stationarity of the squared distance.
        double t = std::atan2(py * rx, px * ry);
        for (int it = 0; it < 12; ++it) {
            double s = std::sin(t), co = std::cos(t);
            double f = (ry * ry - rx * rx) * s * co + px * rx * s - py * ry * co;
            double fp = (ry * ry - rx * rx) * (co * co - s * s) + px * rx * co + py * ry * s;
            if (fp == 0.0) break;
            double step = f / fp;
            t -= step;
            if (std::abs(step) < 1e-14) break;
        }
        double s = std::sin(t), co = std::cos(t);
        double denom = rx * rx * s * s + ry * ry * co * co;
        return rx * ry / (denom * std::sqrt(denom));
    };
}

}  // namespace maxseg
