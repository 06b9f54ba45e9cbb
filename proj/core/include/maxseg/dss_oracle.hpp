#pragma once

#include <optional>
#include <span>
#include <vector>

#include "maxseg/dss.hpp"

namespace maxseg {

/// Brute-force DSS test: searches every canonical coprime slope (a,b) with
/// |a|,|b| bounded by the run length and every shift. Returns a witness
/// line containing all points, or nothing. Reference oracle for the
/// incremental recognizer; independent of it by construction (pure
/// remainder-range scans). Intended for runs of at most a few hundred
/// points. A single point yields the conventional witness (0,1,-y).
std::optional<StandardLine> is_dss_oracle(std::span<const LatticePoint> points);

/// For every index i of a contour, the absolute front F(i) computed by
/// exhaustive slope enumeration (sliding remainder-range windows per
/// slope). Throws DegenerateContourError if a closed contour is one DSS
/// and std::invalid_argument above the size cap (600 points).
std::vector<Int> oracle_front_table(const Contour& c);

/// Maximal segments straight from the definition: i starts a maximal
/// segment iff F(i-1) < F(i). Witnesses are filled by is_dss_oracle plus a
/// remainder scan, not by the recognizer. Test-grade (contour <= 600 points).
std::vector<MaximalSegment> oracle_maximal_segments(const Contour& c);

}  // namespace maxseg
