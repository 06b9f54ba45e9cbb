#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "maxseg/lattice.hpp"

namespace maxseg {

using Rational = boost::rational<Int>;

enum class ShapeKind { disk, ellipse };

/// An axis-aligned disk or ellipse with exact rational center and radii.
/// Both have C^3 boundary with strictly positive curvature.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::disk;
    Rational center_x{0};
    Rational center_y{0};
    Rational radius_x{1};
    Rational radius_y{1};

    static ShapeSpec disk(Rational r, Rational cx = Rational(0), Rational cy = Rational(0));
    static ShapeSpec ellipse(Rational rx, Rational ry, Rational cx = Rational(0),
                             Rational cy = Rational(0));

    ShapeSpec translated(Rational dx, Rational dy) const;
};

/// Run of grid points of one row, x_min..x_max inclusive.
struct RowSpan {
    Int y = 0;
    Int x_min = 0;
    Int x_max = 0;
};

/// Row-interval form of a digitized convex shape. Rows are stored in
/// ascending y and are all nonempty; consecutive rows overlap in x, so the
/// set is 4-connected.
struct DigitizedRows {
    std::vector<RowSpan> rows;

    Int point_count() const;
    bool contains(Int x, Int y) const;
    bool empty() const { return rows.empty(); }
    std::vector<LatticePoint> points() const;  // row-major, deterministic
};

/// Gauss digitization { (x,y) : (x/m, y/m) in S } with closed (boundary
/// inclusive) membership, decided in exact integer arithmetic.
/// Throws std::invalid_argument for m < 1.
DigitizedRows digitize_rows(const ShapeSpec& shape, Int m);
std::vector<LatticePoint> digitize(const ShapeSpec& shape, Int m);

/// Exact membership test of one grid point (used by tests as the
/// row-computation oracle).
bool shape_contains_grid_point(const ShapeSpec& shape, Int m, LatticePoint p);

}  // namespace maxseg
