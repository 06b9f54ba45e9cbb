#pragma once

#include <optional>
#include <vector>

#include "maxseg/contour.hpp"
#include "maxseg/lattice.hpp"

namespace maxseg {

struct DegenerateContourError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic line a*x - b*y in [mu, mu + |a| + |b|): the 4-connected
/// digital line with slope a/b and shift mu.
struct StandardLine {
    Int a = 0;
    Int b = 1;
    Int mu = 0;

    Int width() const { return (a < 0 ? -a : a) + (b < 0 ? -b : b); }
    Int remainder(LatticePoint p) const { return a * p.x - b * p.y; }
    bool contains(LatticePoint p) const {
        Int r = remainder(p);
        return mu <= r && r < mu + width();
    }
    /// Same point set, remainders negated: swaps the leaning classes.
    StandardLine negated() const { return {-a, -b, -(mu + width() - 1)}; }

    friend bool operator==(const StandardLine&, const StandardLine&) = default;
};

/// Incremental recognizer for digital straight segments over a 4-connected
/// run of points. Maintains the witness line and the four principal leaning
/// points in O(1) per accepted point; a rejected point leaves the state
/// untouched. U1/L1 are the first leaning points in run order, U2/L2 the
/// last.
class DssRecognizer {
  public:
    explicit DssRecognizer(LatticePoint p0)
        : line_{0, 1, -p0.y}, u1_(p0), u2_(p0), l1_(p0), l2_(p0), last_(p0), n_(1) {}

    /// Appends the run successor. Throws std::invalid_argument if `next`
    /// is not 4-adjacent to the current endpoint; returns false (state
    /// unchanged) if the extended run is not a digital straight segment.
    bool extend_front(LatticePoint next);

    const StandardLine& line() const { return line_; }
    LatticePoint u1() const { return u1_; }
    LatticePoint u2() const { return u2_; }
    LatticePoint l1() const { return l1_; }
    LatticePoint l2() const { return l2_; }
    LatticePoint front_point() const { return last_; }
    Int size() const { return n_; }

  private:
    StandardLine line_;
    LatticePoint u1_, u2_, l1_, l2_, last_;
    Int n_;
    // Step alphabet: a run contained in a standard line is a subpath of a
    // 4-arc, so it uses at most two perpendicular step vectors.
    LatticeVector step1_{0, 0}, step2_{0, 0};
};

/// A recognized segment on a contour: index range plus line and principal
/// leaning points. Indices are absolute with first <= last; on a closed
/// contour last may exceed the point count (cyclic wrap) and first lies in
/// [0, N) for maximal segments.
struct DssWitness {
    StandardLine line;
    Int first = 0;
    Int last = 0;
    LatticePoint u1, u2, l1, l2;
};

struct MaximalSegment {
    DssWitness witness;

    Int first() const { return witness.first; }
    Int last() const { return witness.last; }
    /// L1 length of the covered path = number of moves.
    Int length() const { return witness.last - witness.first; }
    /// Cyclic containment of contour index i (given contour size n).
    bool covers(Int i, Int n) const {
        Int d = (i - witness.first) % n;
        if (d < 0) d += n;
        return d <= witness.last - witness.first;
    }
};

/// Front of i: the largest absolute j >= i such that points i..j form a
/// DSS. Stops at the end for open contours. For closed contours throws
/// DegenerateContourError if the whole contour is one DSS.
Int front(const Contour& c, Int i);
/// Back of j, symmetric: the smallest absolute i <= j keeping i..j a DSS.
Int back(const Contour& c, Int j);

/// All maximal segments of a closed contour in contour order, first
/// indices in [0, N), strictly increasing in both first and last (no
/// nesting). Witness lines are canonicalized so that the upper leaning
/// class (remainder mu) is the geometrically outward side of the
/// counterclockwise contour. Preconditions: closed, >= 5 points, not
/// globally straight (throws DegenerateContourError otherwise).
std::vector<MaximalSegment> maximal_segments(const Contour& c);

/// Per-index distances to the front/back extremities, derived from the
/// maximal segments: front(i) = i + dist_front[i], back(i) = i - dist_back[i].
struct FrontBackTable {
    std::vector<Int> dist_front;
    std::vector<Int> dist_back;
};
FrontBackTable front_back_table(const Contour& c, const std::vector<MaximalSegment>& segments);

}  // namespace maxseg
