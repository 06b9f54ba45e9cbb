#pragma once

#include <array>
#include <span>
#include <unordered_map>
#include <vector>

#include "maxseg/contour.hpp"
#include "maxseg/dss.hpp"
#include "maxseg/lattice.hpp"
#include "maxseg/shape.hpp"

namespace maxseg {

/// Convex lattice polygon: counterclockwise minimal vertex list, starting
/// at the lexicographically smallest vertex. Degenerate for collinear or
/// single-point inputs.
struct Cdp {
    std::vector<LatticePoint> vertices;
    bool degenerate = false;

    Int edge_count() const { return static_cast<Int>(vertices.size()); }
};

/// Monotone-chain hull with exact integer orientation tests; collinear
/// boundary points are excluded from the vertex list.
Cdp convex_hull(std::span<const LatticePoint> points);

/// True iff the lattice points of the convex hull are exactly the input
/// set (the set equals the digitization of its own hull).
bool is_cdp(std::span<const LatticePoint> points);
bool is_cdp(const DigitizedRows& rows);

/// Slope and multiplicity of a digital edge: displacement = f * primitive
/// vector, slope reported octant-normalized with 0 <= a <= b.
struct EdgeSlope {
    Int a = 0;
    Int b = 1;
    Int f = 1;
};
EdgeSlope edge_pattern_decomposition(LatticeVector displacement);

/// Contour run between two consecutive polygon vertices. Indices are
/// absolute with to_index > from_index (the wrap edge runs past N).
struct DigitalEdge {
    LatticePoint from, to;
    Int from_index = 0;
    Int to_index = 0;
    Int slope_a = 0;
    Int slope_b = 1;
    Int multiplicity = 1;
    Int l1_length = 0;  // = to_index - from_index = f * (a + b)
};

/// The analysis polygon of a closed convex contour: the convex hull of the
/// contour points with every vertex bound to its contour index, plus the
/// digital-edge decomposition.
struct CdpChain {
    Cdp cdp;
    std::vector<Int> vertex_index;     // ascending contour index per vertex
    std::vector<DigitalEdge> edges;    // edge k joins vertex k to vertex k+1
    std::unordered_map<LatticePoint, Int, LatticePointHash> vertex_of_point;

    Int edge_count() const { return static_cast<Int>(edges.size()); }
};

CdpChain make_cdp_chain(const Contour& c);

/// The move word of a digital edge mapped into its canonical first-octant
/// frame (chord direction in the first octant, curve weakly below the
/// chord, so the vertices are the upper leaning points).
std::string canonical_edge_word(const Contour& c, const DigitalEdge& e);
/// Word equality with the slope's pattern repeated f times, compared
/// lazily (the power is never materialized).
bool edge_word_matches_pattern(const Contour& c, const DigitalEdge& e);

/// An edge whose two vertices are the leftmost and rightmost upper leaning
/// points of a maximal segment.
struct SupportingEdgePair {
    Int edge_index = 0;
    Int segment_index = 0;
};

/// Pairs every segment having two or more upper leaning points with its
/// supporting edge. Asserts (throws std::logic_error) when the leaning
/// points are not consecutive vertices, slopes disagree, or an edge is
/// matched twice.
std::vector<SupportingEdgePair> match_supporting_edges(
    const CdpChain& chain, const std::vector<MaximalSegment>& segments);

/// Indices of segments with a single upper leaning point (two consecutive
/// lower leaning points); their upper leaning point is a polygon vertex.
std::vector<Int> single_ulp_segments(const std::vector<MaximalSegment>& segments);

/// Largest number of single-upper-leaning-point segments sharing one
/// vertex. Recorded as empirical data only; nothing is asserted about it.
Int max_single_ulp_segments_per_vertex(const CdpChain& chain,
                                       const std::vector<MaximalSegment>& segments);

/// 0/1/2 labels: 2 = endpoint of a supporting edge, 1 = upper leaning
/// point of some maximal segment but not a 2-vertex, 0 = the rest.
struct VertexLabeling {
    std::vector<int> labels;
    Int n0 = 0, n1 = 0, n2 = 0;
    std::array<std::array<Int, 3>, 3> nij{};  // edge label pairs, contour order

    Int n22() const { return nij[2][2]; }
};
VertexLabeling label_vertices(const CdpChain& chain,
                              const std::vector<MaximalSegment>& segments,
                              const std::vector<SupportingEdgePair>& pairs);

struct SupportingLengthReport {
    bool passed = true;
    Int multiplicity = 1;
    Int edge_l1 = 0;
    Int ms_l1 = 0;
};
/// Length link between a supporting edge and its maximal segment:
/// L1(E) <= L1(MS) <= (f+2)/f * L1(E) - 2 and the 1/3..3x chain.
SupportingLengthReport check_supporting_length(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                        const SupportingEdgePair& pair);

struct SingleLeaningReport {
    bool passed = true;
    Int ms_l1 = 0;
    Int prev_edge_l1 = 0;
    Int next_edge_l1 = 0;
};
/// Single-upper-leaning-point segment at vertex V_k:
/// L1(MS) <= 4 (L1(V_{k-1}V_k) + L1(V_k V_{k+1})).
SingleLeaningReport check_single_leaning_length(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                        Int segment_index);

struct EdgeSpanReport {
    bool passed = true;
    bool applicable = false;  // slope complexity >= 2
    Int complexity = 0;
    Int left_edges = 0;
    Int right_edges = 0;
};
/// The maximal segment of a supporting edge of slope complexity n includes
/// at most n other edges on each side (an edge counts when one of its
/// interior contour points lies in the segment range).
EdgeSpanReport check_edge_span(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                      const SupportingEdgePair& pair);

struct SegmentContainmentReport {
    bool passed = true;
    Int segment_index = -1;
    Int edge_index = -1;
};
/// No maximal segment is strictly contained in a digital edge.
SegmentContainmentReport check_segment_containment(const CdpChain& chain, const std::vector<MaximalSegment>& segments);

struct LabelingReport {
    bool passed = true;
    bool n2_bound_ok = true;       // n_2 <= 2 n_22
    bool n00_bound_ok = true;      // n_00 <= (n_1 + n_2) * pell_bound(grid)
    bool min_ms_bound_ok = true;   // min L1(MS) <= 8 Per / (n_1 + 2 n_22)
};
LabelingReport check_labeling_bounds(const CdpChain& chain, const VertexLabeling& labeling,
                                     const std::vector<MaximalSegment>& segments, Int grid_size);

struct CdpStats {
    Int n_e = 0;
    Int per_l1 = 0;
    Int ms_len_min = 0;
    Int ms_len_max = 0;
    double ms_len_mean = 0.0;
    Int n_1 = 0;
    Int n_22 = 0;
    double thm3_lhs = 0.0;    // n_e / (n_1 + 2 n_22)
    double thm4_ratio = 0.0;  // min L1(MS) * n_e / Per
};
CdpStats cdp_stats(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                   const VertexLabeling& labeling);

}  // namespace maxseg
