#pragma once

#include <functional>

#include "maxseg/contour.hpp"
#include "maxseg/dss.hpp"
#include "maxseg/shape.hpp"

namespace maxseg {

/// Radius of the circle through three grid points, from exact integer
/// squared side lengths and cross product with a single floating square
/// root at the end. Collinear points (exact zero cross product) give
/// +infinity; coincident points throw std::invalid_argument.
double circumcircle_radius(LatticePoint p, LatticePoint q, LatticePoint r);

/// Extremities of the longest DSS through index i: (back(i), front(i)),
/// absolute indices.
std::pair<Int, Int> half_tangents(const Contour& c, Int i);

/// Curvature at one contour point: inverse circumcircle radius through the
/// point and its two half-tangent extremities, rescaled by the resolution
/// (kappa_hat = m / radius_grid; 0 for a straight configuration).
struct CurvatureEstimate {
    Int index = 0;
    double kappa_hat = 0.0;
    double radius_grid = 0.0;  // +infinity when collinear
};
CurvatureEstimate curvature_circumcircle(const Contour& c, Int i, Int m);
/// Bulk variant against a precomputed front/back table.
CurvatureEstimate curvature_circumcircle(const Contour& c, const FrontBackTable& table, Int i,
                                         Int m);

/// Mean and standard deviation of |kappa_hat - kappa_true| over the whole
/// contour; kappa_true is evaluated at the point's shape coordinates
/// (x/m, y/m).
struct ErrorStats {
    double mean_abs_err = 0.0;
    double std_abs_err = 0.0;
    Int m = 0;
};
using CurvatureFn = std::function<double(double, double)>;
ErrorStats error_stats(const Contour& c, Int m, const CurvatureFn& true_curvature);
ErrorStats error_stats(const Contour& c, const FrontBackTable& table, Int m,
                       const CurvatureFn& true_curvature);

/// Pointwise true curvature of a shape boundary: constant 1/r for a disk,
/// curvature at the nearest boundary parameter for an ellipse.
CurvatureFn true_curvature_function(const ShapeSpec& shape);

}  // namespace maxseg
