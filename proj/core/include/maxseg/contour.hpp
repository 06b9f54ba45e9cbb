#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxseg/lattice.hpp"
#include "maxseg/shape.hpp"

namespace maxseg {

struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Freeman 4-codes: 0 = +x, 1 = +y, 2 = -x, 3 = -y.
inline LatticeVector freeman_delta(char code) {
    switch (code) {
        case '0': return {1, 0};
        case '1': return {0, 1};
        case '2': return {-1, 0};
        case '3': return {0, -1};
        default: throw std::invalid_argument("freeman_delta: bad code");
    }
}
inline char freeman_opposite(char code) {
    return static_cast<char>('0' + (((code - '0') + 2) & 3));
}

/// A 4-connected path of inter-pixel vertices (pointels). For a closed
/// contour the displacements sum to zero, consecutive moves never reverse
/// (cyclically), and there are as many points as moves; index arithmetic
/// is cyclic. Immutable after construction.
class Contour {
  public:
    /// Validates the invariants; throws std::invalid_argument on violation.
    static Contour make(LatticePoint start, std::string mvs, bool closed);

    LatticePoint start() const { return points_.front(); }
    const std::string& moves() const { return moves_; }
    bool closed() const { return closed_; }

    /// Number of distinct points: moves() for a closed contour,
    /// moves()+1 for an open one.
    Int size() const { return static_cast<Int>(points_.size()); }

    /// Point at index i; cyclic (any integer i) when closed.
    LatticePoint point(Int i) const { return points_[static_cast<std::size_t>(wrap(i))]; }
    /// Move leaving point i; cyclic when closed.
    char move(Int i) const { return moves_[static_cast<std::size_t>(wrap(i))]; }

    Int wrap(Int i) const {
        Int n = size();
        Int r = i % n;
        return r < 0 ? r + n : r;
    }

    const std::vector<LatticePoint>& points() const { return points_; }

  private:
    Contour() = default;
    std::vector<LatticePoint> points_;
    std::string moves_;
    bool closed_ = true;
};

/// Traces the outer inter-pixel boundary of the union of unit squares
/// centered on the given pixels, counterclockwise, starting at the
/// lexicographically smallest boundary vertex. Pointels are stored in the
/// corner frame (pixel (x,y) owns corners (x,y)..(x+1,y+1), i.e. pixel
/// centers shifted by (1/2,1/2)).
/// Throws std::invalid_argument on an empty set and NotConnectedError if
/// the pixels are not 4-connected.
Contour trace_contour(const std::vector<LatticePoint>& pixels);
Contour trace_contour(const DigitizedRows& rows);

/// Chain-code text format:
///   line 1: "start <x> <y> closed <0|1>"
///   line 2: the move string over {0,1,2,3}
/// Reader and writer round-trip byte-exactly.
std::string to_chain_code(const Contour& c);
Contour from_chain_code(std::string_view text);

}  // namespace maxseg
