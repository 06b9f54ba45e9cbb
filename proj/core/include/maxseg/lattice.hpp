#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace maxseg {

using Int = std::int64_t;
#ifdef __SIZEOF_INT128__
using Wide = __int128;
#else
#error "maxseg needs a 128-bit integer type"
#endif

/// A point of the digital plane. Coordinates are exact integers; every
/// product of two coordinates is taken in 128-bit arithmetic so that
/// |x|,|y| <= 10^9 never overflows.
struct LatticePoint {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeVector {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline LatticeVector operator-(LatticePoint a, LatticePoint b) {
    return {a.x - b.x, a.y - b.y};
}
inline LatticePoint operator+(LatticePoint p, LatticeVector v) {
    return {p.x + v.x, p.y + v.y};
}
inline LatticeVector operator-(LatticeVector v) { return {-v.x, -v.y}; }
inline LatticeVector operator+(LatticeVector a, LatticeVector b) {
    return {a.x + b.x, a.y + b.y};
}
inline LatticeVector operator*(Int k, LatticeVector v) { return {k * v.x, k * v.y}; }

inline Wide cross(LatticeVector a, LatticeVector b) {
    return Wide(a.x) * b.y - Wide(a.y) * b.x;
}
inline Wide dot(LatticeVector a, LatticeVector b) {
    return Wide(a.x) * b.x + Wide(a.y) * b.y;
}
inline Wide squared_norm(LatticeVector v) { return dot(v, v); }
inline Int l1_norm(LatticeVector v) {
    return (v.x < 0 ? -v.x : v.x) + (v.y < 0 ? -v.y : v.y);
}

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// One of the eight axial/diagonal symmetries of the lattice,
/// sigma(x,y) = (sx*u, sy*v) with (u,v) = swap ? (y,x) : (x,y).
struct OctantSymmetry {
    bool swap = false;
    int sx = 1;
    int sy = 1;

    LatticeVector apply(LatticeVector v) const {
        Int u = swap ? v.y : v.x;
        Int w = swap ? v.x : v.y;
        return {sx * u, sy * w};
    }
    LatticePoint apply(LatticePoint p) const {
        auto v = apply(LatticeVector{p.x, p.y});
        return {v.x, v.y};
    }
    OctantSymmetry inverse() const {
        if (!swap) return *this;
        return {true, sy, sx};
    }
    int det() const { return swap ? -sx * sy : sx * sy; }

    friend bool operator==(const OctantSymmetry&, const OctantSymmetry&) = default;
};

/// The eight symmetries in a fixed enumeration order (identity first).
inline const std::array<OctantSymmetry, 8>& octant_symmetries() {
    static const std::array<OctantSymmetry, 8> table = {{
        {false, 1, 1},
        {false, -1, 1},
        {false, 1, -1},
        {false, -1, -1},
        {true, 1, 1},
        {true, -1, 1},
        {true, 1, -1},
        {true, -1, -1},
    }};
    return table;
}

inline bool in_first_octant(LatticeVector v) { return 0 <= v.y && v.y <= v.x; }

struct OctantNormalization {
    OctantSymmetry symmetry;  // maps the original displacement into the first octant
    LatticeVector normalized;
};

/// Maps the displacement q - p into the first octant (0 <= dy <= dx) and
/// reports which symmetry did it. For displacements strictly inside an
/// octant the symmetry is unique; on octant boundaries the first match in
/// the fixed enumeration is returned. Throws std::invalid_argument for p == q.
inline OctantNormalization octant_normalize(LatticePoint p, LatticePoint q) {
    if (p == q) throw std::invalid_argument("octant_normalize: p == q");
    LatticeVector d = q - p;
    for (const auto& s : octant_symmetries()) {
        LatticeVector n = s.apply(d);
        if (in_first_octant(n)) return {s, n};
    }
    throw std::logic_error("octant_normalize: no symmetry matched");
}

inline Int gcd_nonneg(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace maxseg
