#include "maxseg/shape.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace maxseg {

using BigInt = boost::multiprecision::cpp_int;

ShapeSpec ShapeSpec::disk(Rational r, Rational cx, Rational cy) {
    if (r <= Rational(0)) throw std::invalid_argument("disk: radius must be positive");
    return {ShapeKind::disk, cx, cy, r, r};
}

ShapeSpec ShapeSpec::ellipse(Rational rx, Rational ry, Rational cx, Rational cy) {
    if (rx <= Rational(0) || ry <= Rational(0))
        throw std::invalid_argument("ellipse: radii must be positive");
    return {ShapeKind::ellipse, cx, cy, rx, ry};
}

ShapeSpec ShapeSpec::translated(Rational dx, Rational dy) const {
    ShapeSpec s = *this;
    s.center_x += dx;
    s.center_y += dy;
    return s;
}

namespace {

// Membership (x/m - cx)^2 / rx^2 + (y/m - cy)^2 / ry^2 <= 1 cleared to
// X^2 * kx + Y^2 * ky <= c with X = x*bx - m*ax*... all integer.
struct ClearedQuadratic {
    BigInt bx, ax, by, ay;  // X = x*bx - ax, Y = y*by - ay
    BigInt kx, ky, c;

    bool contains(Int x, Int y) const {
        BigInt X = BigInt(x) * bx - ax;
        BigInt Y = BigInt(y) * by - ay;
        return X * X * kx + Y * Y * ky <= c;
    }
};

ClearedQuadratic clear_denominators(const ShapeSpec& s, Int m) {
    BigInt ax = s.center_x.numerator(), bx = s.center_x.denominator();
    BigInt ay = s.center_y.numerator(), by = s.center_y.denominator();
    BigInt arx = s.radius_x.numerator(), brx = s.radius_x.denominator();
    BigInt ary = s.radius_y.numerator(), bry = s.radius_y.denominator();
    ClearedQuadratic q;
    q.bx = bx;
    q.ax = ax * m;
    q.by = by;
    q.ay = ay * m;
    q.kx = by * by * brx * brx * ary * ary;
    q.ky = bx * bx * bry * bry * arx * arx;
    q.c = BigInt(m) * m * bx * bx * by * by * arx * arx * ary * ary;
    return q;
}

Int floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return static_cast<Int>(q);
}

Int ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return static_cast<Int>(q);
}

}  // namespace

bool shape_contains_grid_point(const ShapeSpec& shape, Int m, LatticePoint p) {
    if (m < 1) throw std::invalid_argument("digitize: resolution must be >= 1");
    return clear_denominators(shape, m).contains(p.x, p.y);
}

DigitizedRows digitize_rows(const ShapeSpec& shape, Int m) {
    if (m < 1) throw std::invalid_argument("digitize: resolution must be >= 1");
    const ClearedQuadratic q = clear_denominators(shape, m);

    // y/m in [cy - ry, cy + ry]
    const Rational ylo = shape.center_y - shape.radius_y;
    const Rational yhi = shape.center_y + shape.radius_y;
    const Int y_first = ceil_div(BigInt(ylo.numerator()) * m, BigInt(ylo.denominator()));
    const Int y_last = floor_div(BigInt(yhi.numerator()) * m, BigInt(yhi.denominator()));

    DigitizedRows out;
    for (Int y = y_first; y <= y_last; ++y) {
        BigInt Y = BigInt(y) * q.by - q.ay;
        BigInt t = q.c - Y * Y * q.ky;
        if (t < 0) continue;
        // X^2 * kx <= t with X = x*bx - ax. Multiplying through by kx makes
        // the left side the perfect square (X*kx)^2, so the integer bound
        // |x*bx*kx - ax*kx| <= isqrt(t*kx) is exact.
        BigInt s = boost::multiprecision::sqrt(BigInt(t * q.kx));
        BigInt D = q.bx * q.kx;
        BigInt E = q.ax * q.kx;
        Int x_lo = ceil_div(E - s, D);
        Int x_hi = floor_div(E + s, D);
        if (x_lo > x_hi) continue;
        // Row widths of an axis-aligned disk/ellipse are unimodal in y, so
        // nonempty rows are contiguous.
        if (!out.rows.empty() && out.rows.back().y != y - 1)
            throw std::logic_error("digitize: interior empty row on a convex shape");
        out.rows.push_back({y, x_lo, x_hi});
    }
    return out;
}

Int DigitizedRows::point_count() const {
    Int n = 0;
    for (const auto& r : rows) n += r.x_max - r.x_min + 1;
    return n;
}

bool DigitizedRows::contains(Int x, Int y) const {
    if (rows.empty()) return false;
    Int idx = y - rows.front().y;
    if (idx < 0 || idx >= static_cast<Int>(rows.size())) return false;
    const RowSpan& r = rows[static_cast<std::size_t>(idx)];
    return r.x_min <= x && x <= r.x_max;
}

std::vector<LatticePoint> DigitizedRows::points() const {
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(point_count()));
    for (const auto& r : rows)
        for (Int x = r.x_min; x <= r.x_max; ++x) pts.push_back({x, r.y});
    return pts;
}

std::vector<LatticePoint> digitize(const ShapeSpec& shape, Int m) {
    return digitize_rows(shape, m).points();
}

}  // namespace maxseg
