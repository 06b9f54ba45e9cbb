#include "maxseg/cdp.hpp"

#include <algorithm>

#include "maxseg/pattern.hpp"

namespace maxseg {

Cdp convex_hull(std::span<const LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Cdp out;
    if (pts.size() == 1) {
        out.vertices = pts;
        out.degenerate = true;
        return out;
    }

    const std::size_t n = pts.size();
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    out.vertices = std::move(hull);
    out.degenerate = out.vertices.size() < 3;
    return out;
}

namespace {

struct HullRowBounds {
    Int y_min = 0;
    // Exact per-row boundary abscissas as fractions num/den, den > 0.
    std::vector<std::pair<Wide, Wide>> lo, hi;

    void update(Int y, Wide num, Wide den) {
        std::size_t i = static_cast<std::size_t>(y - y_min);
        auto& l = lo[i];
        auto& h = hi[i];
        if (l.second == 0 || num * l.second < l.first * den) l = {num, den};
        if (h.second == 0 || num * h.second > h.first * den) h = {num, den};
    }
};

Int floor_frac(Wide num, Wide den) {
    Wide q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --q;
    return static_cast<Int>(q);
}
Int ceil_frac(Wide num, Wide den) {
    Wide q = num / den;
    if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
    return static_cast<Int>(q);
}

// Exact lattice row intervals [ceil(x_left), floor(x_right)] of a hull.
HullRowBounds hull_row_bounds(const Cdp& hull) {
    Int y_min = hull.vertices.front().y, y_max = y_min;
    for (const auto& v : hull.vertices) {
        y_min = std::min(y_min, v.y);
        y_max = std::max(y_max, v.y);
    }
    HullRowBounds b;
    b.y_min = y_min;
    b.lo.assign(static_cast<std::size_t>(y_max - y_min + 1), {0, 0});
    b.hi.assign(static_cast<std::size_t>(y_max - y_min + 1), {0, 0});

    const auto& vs = hull.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint p = vs[i];
        LatticePoint q = vs[n == 1 ? 0 : (i + 1) % n];
        if (p.y == q.y) {
            b.update(p.y, std::min(p.x, q.x), 1);
            b.update(p.y, std::max(p.x, q.x), 1);
            continue;
        }
        Int ylo = std::min(p.y, q.y), yhi = std::max(p.y, q.y);
        Wide den = q.y - p.y;
        for (Int y = ylo; y <= yhi; ++y) {
            Wide num = Wide(p.x) * den + Wide(y - p.y) * (q.x - p.x);
            b.update(y, den < 0 ? -num : num, den < 0 ? -den : den);
        }
    }
    return b;
}

// Rows of a point set: unique sorted points grouped by y. Returns false if
// some row is not a contiguous interval.
bool rows_of_points(std::span<const LatticePoint> points, std::vector<RowSpan>& out) {
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](LatticePoint a, LatticePoint b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        while (j + 1 < pts.size() && pts[j + 1].y == pts[i].y) {
            if (pts[j + 1].x != pts[j].x + 1) return false;
            ++j;
        }
        out.push_back({pts[i].y, pts[i].x, pts[j].x});
        i = j + 1;
    }
    return true;
}

bool is_cdp_rows_impl(const std::vector<RowSpan>& rows, const Cdp& hull) {
    if (hull.vertices.size() == 1) return rows.size() == 1 && rows[0].x_min == rows[0].x_max;
    HullRowBounds b = hull_row_bounds(hull);
    std::size_t ri = 0;
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
        Int y = b.y_min + static_cast<Int>(i);
        if (b.lo[i].second == 0) return false;  // hull row untouched; cannot happen
        Int xlo = ceil_frac(b.lo[i].first, b.lo[i].second);
        Int xhi = floor_frac(b.hi[i].first, b.hi[i].second);
        bool hull_row_empty = xlo > xhi;
        bool have_input_row = ri < rows.size() && rows[ri].y == y;
        if (hull_row_empty) {
            if (have_input_row) return false;
            continue;
        }
        if (!have_input_row) return false;
        if (rows[ri].x_min != xlo || rows[ri].x_max != xhi) return false;
        ++ri;
    }
    return ri == rows.size();
}

}  // namespace

bool is_cdp(std::span<const LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("is_cdp: empty point set");
    std::vector<RowSpan> rows;
    if (!rows_of_points(points, rows)) return false;
    std::vector<LatticePoint> candidates;
    candidates.reserve(rows.size() * 2);
    for (const auto& r : rows) {
        candidates.push_back({r.x_min, r.y});
        candidates.push_back({r.x_max, r.y});
    }
    return is_cdp_rows_impl(rows, convex_hull(candidates));
}

bool is_cdp(const DigitizedRows& rows) {
    if (rows.empty()) throw std::invalid_argument("is_cdp: empty point set");
    std::vector<LatticePoint> candidates;
    candidates.reserve(rows.rows.size() * 2);
    for (const auto& r : rows.rows) {
        candidates.push_back({r.x_min, r.y});
        candidates.push_back({r.x_max, r.y});
    }
    return is_cdp_rows_impl(rows.rows, convex_hull(candidates));
}

EdgeSlope edge_pattern_decomposition(LatticeVector displacement) {
    if (displacement == LatticeVector{0, 0})
        throw std::invalid_argument("edge_pattern_decomposition: zero displacement");
    Int g = gcd_nonneg(displacement.x, displacement.y);
    Int dx = (displacement.x < 0 ? -displacement.x : displacement.x) / g;
    Int dy = (displacement.y < 0 ? -displacement.y : displacement.y) / g;
    return {std::min(dx, dy), std::max(dx, dy), g};
}

CdpChain make_cdp_chain(const Contour& c) {
    if (!c.closed()) throw std::invalid_argument("make_cdp_chain: contour must be closed");
    const Int n = c.size();

    CdpChain chain;
    chain.cdp = convex_hull(c.points());
    if (chain.cdp.degenerate) throw std::invalid_argument("make_cdp_chain: degenerate hull");

    chain.vertex_of_point.reserve(chain.cdp.vertices.size() * 2);
    std::unordered_map<LatticePoint, Int, LatticePointHash> contour_index;
    contour_index.reserve(static_cast<std::size_t>(n) * 2);
    for (Int i = 0; i < n; ++i) contour_index.emplace(c.point(i), i);

    struct VI {
        LatticePoint v;
        Int idx;
    };
    std::vector<VI> vis;
    vis.reserve(chain.cdp.vertices.size());
    for (const auto& v : chain.cdp.vertices) {
        auto it = contour_index.find(v);
        if (it == contour_index.end())
            throw std::logic_error("make_cdp_chain: hull vertex not on the contour");
        vis.push_back({v, it->second});
    }
    std::sort(vis.begin(), vis.end(), [](const VI& a, const VI& b) { return a.idx < b.idx; });

    chain.cdp.vertices.clear();
    for (std::size_t k = 0; k < vis.size(); ++k) {
        chain.cdp.vertices.push_back(vis[k].v);
        chain.vertex_index.push_back(vis[k].idx);
        chain.vertex_of_point.emplace(vis[k].v, static_cast<Int>(k));
    }

    Int total = 0;
    for (std::size_t k = 0; k < vis.size(); ++k) {
        const VI& a = vis[k];
        const VI& b = vis[(k + 1) % vis.size()];
        DigitalEdge e;
        e.from = a.v;
        e.to = b.v;
        e.from_index = a.idx;
        e.to_index = (k + 1 < vis.size()) ? b.idx : b.idx + n;
        EdgeSlope slope = edge_pattern_decomposition(b.v - a.v);
        e.slope_a = slope.a;
        e.slope_b = slope.b;
        e.multiplicity = slope.f;
        e.l1_length = e.to_index - e.from_index;
        if (e.l1_length != slope.f * (slope.a + slope.b))
            throw std::logic_error("make_cdp_chain: edge length disagrees with its slope");
        total += e.l1_length;
        chain.edges.push_back(e);
    }
    if (total != n) throw std::logic_error("make_cdp_chain: edges do not tile the contour");
    return chain;
}

namespace {

// Canonical frame of a digital edge: the chord direction lands in the
// first octant and the curve (left of the chord on a CCW contour) lands
// weakly below it. A reflection does that in forward traversal; a rotation
// needs the edge read backward (which puts the curve right of the travel
// direction).
struct EdgeFrame {
    OctantSymmetry symmetry;
    bool backward = false;
};

EdgeFrame edge_frame(LatticeVector chord) {
    for (const auto& s : octant_symmetries())
        if (s.det() == -1 && in_first_octant(s.apply(chord))) return {s, false};
    for (const auto& s : octant_symmetries())
        if (s.det() == 1 && in_first_octant(s.apply(-chord))) return {s, true};
    throw std::logic_error("edge_frame: no admissible symmetry");
}

char mapped_letter(const OctantSymmetry& s, LatticeVector delta) {
    LatticeVector d = s.apply(delta);
    if (d == LatticeVector{1, 0}) return '0';
    if (d == LatticeVector{0, 1}) return '1';
    throw std::logic_error("edge word: move outside the first-octant alphabet");
}

template <typename Emit>
void for_each_canonical_letter(const Contour& c, const DigitalEdge& e, Emit&& emit) {
    EdgeFrame f = edge_frame(e.to - e.from);
    if (!f.backward) {
        for (Int i = e.from_index; i < e.to_index; ++i)
            emit(mapped_letter(f.symmetry, freeman_delta(c.move(i))));
    } else {
        for (Int i = e.to_index - 1; i >= e.from_index; --i)
            emit(mapped_letter(f.symmetry, -freeman_delta(c.move(i))));
    }
}

}  // namespace

std::string canonical_edge_word(const Contour& c, const DigitalEdge& e) {
    std::string w;
    w.reserve(static_cast<std::size_t>(e.l1_length));
    for_each_canonical_letter(c, e, [&](char ch) { w.push_back(ch); });
    return w;
}

bool edge_word_matches_pattern(const Contour& c, const DigitalEdge& e) {
    PatternWord pat = pattern_word_for_slope(e.slope_a, e.slope_b);
    const std::size_t plen = pat.word.size();
    std::size_t pos = 0;
    bool ok = true;
    for_each_canonical_letter(c, e, [&](char ch) {
        if (ch != pat.word[pos % plen]) ok = false;
        ++pos;
    });
    return ok && pos == plen * static_cast<std::size_t>(e.multiplicity);
}

std::vector<Int> single_ulp_segments(const std::vector<MaximalSegment>& segments) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < segments.size(); ++i)
        if (segments[i].witness.u1 == segments[i].witness.u2) out.push_back(static_cast<Int>(i));
    return out;
}

Int max_single_ulp_segments_per_vertex(const CdpChain& chain,
                                       const std::vector<MaximalSegment>& segments) {
    std::unordered_map<LatticePoint, Int, LatticePointHash> count;
    Int best = 0;
    for (Int si : single_ulp_segments(segments)) {
        const auto& w = segments[static_cast<std::size_t>(si)].witness;
        if (!chain.vertex_of_point.contains(w.u1)) continue;
        best = std::max(best, ++count[w.u1]);
    }
    return best;
}

std::vector<SupportingEdgePair> match_supporting_edges(
    const CdpChain& chain, const std::vector<MaximalSegment>& segments) {
    std::vector<SupportingEdgePair> pairs;
    std::vector<bool> edge_used(chain.edges.size(), false);
    for (std::size_t si = 0; si < segments.size(); ++si) {
        const DssWitness& w = segments[si].witness;
        if (w.u1 == w.u2) continue;
        auto it1 = chain.vertex_of_point.find(w.u1);
        auto it2 = chain.vertex_of_point.find(w.u2);
        if (it1 == chain.vertex_of_point.end() || it2 == chain.vertex_of_point.end())
            throw std::logic_error("match_supporting_edges: extremal upper leaning point is not a vertex");
        Int k = it1->second;
        Int V = static_cast<Int>(chain.edges.size());
        if ((k + 1) % V != it2->second % V)
            throw std::logic_error("match_supporting_edges: upper leaning points are not an edge");
        const DigitalEdge& e = chain.edges[static_cast<std::size_t>(k)];
        const StandardLine& line = w.line;
        Int la = line.a < 0 ? -line.a : line.a;
        Int lb = line.b < 0 ? -line.b : line.b;
        if (std::min(la, lb) != e.slope_a || std::max(la, lb) != e.slope_b)
            throw std::logic_error("match_supporting_edges: slopes disagree");
        if (edge_used[static_cast<std::size_t>(k)])
            throw std::logic_error("match_supporting_edges: edge supports two segments");
        edge_used[static_cast<std::size_t>(k)] = true;
        pairs.push_back({k, static_cast<Int>(si)});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const SupportingEdgePair& a, const SupportingEdgePair& b) {
                  return a.edge_index < b.edge_index;
              });
    return pairs;
}

VertexLabeling label_vertices(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                              const std::vector<SupportingEdgePair>& pairs) {
    const std::size_t V = chain.edges.size();
    VertexLabeling lab;
    lab.labels.assign(V, 0);
    for (const auto& p : pairs) {
        lab.labels[static_cast<std::size_t>(p.edge_index)] = 2;
        lab.labels[(static_cast<std::size_t>(p.edge_index) + 1) % V] = 2;
    }
    for (Int si : single_ulp_segments(segments)) {
        const auto& w = segments[static_cast<std::size_t>(si)].witness;
        auto it = chain.vertex_of_point.find(w.u1);
        if (it == chain.vertex_of_point.end())
            throw std::logic_error("label_vertices: single upper leaning point is not a vertex");
        auto& l = lab.labels[static_cast<std::size_t>(it->second)];
        if (l != 2) l = 1;
    }
    for (std::size_t k = 0; k < V; ++k) {
        int a = lab.labels[k];
        int b = lab.labels[(k + 1) % V];
        lab.nij[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
        (a == 0 ? lab.n0 : a == 1 ? lab.n1 : lab.n2) += 1;
    }
    return lab;
}

SupportingLengthReport check_supporting_length(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                        const SupportingEdgePair& pair) {
    const DigitalEdge& e = chain.edges[static_cast<std::size_t>(pair.edge_index)];
    const MaximalSegment& s = segments[static_cast<std::size_t>(pair.segment_index)];
    SupportingLengthReport r;
    r.multiplicity = e.multiplicity;
    r.edge_l1 = e.l1_length;
    r.ms_l1 = s.length();
    const Int f = e.multiplicity;
    bool tight = r.edge_l1 <= r.ms_l1 && f * r.ms_l1 <= (f + 2) * r.edge_l1 - 2 * f;
    bool loose = 3 * r.edge_l1 >= r.ms_l1 && r.edge_l1 <= r.ms_l1;
    r.passed = tight && loose;
    return r;
}

SingleLeaningReport check_single_leaning_length(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                        Int segment_index) {
    const auto& w = segments[static_cast<std::size_t>(segment_index)].witness;
    if (!(w.u1 == w.u2))
        throw std::invalid_argument("check_single_leaning_length: segment has more than one upper leaning point");
    auto it = chain.vertex_of_point.find(w.u1);
    if (it == chain.vertex_of_point.end())
        throw std::logic_error("check_single_leaning_length: upper leaning point is not a vertex");
    const std::size_t V = chain.edges.size();
    const std::size_t k = static_cast<std::size_t>(it->second);
    SingleLeaningReport r;
    r.ms_l1 = w.last - w.first;
    r.prev_edge_l1 = chain.edges[(k + V - 1) % V].l1_length;
    r.next_edge_l1 = chain.edges[k].l1_length;
    r.passed = r.ms_l1 <= 4 * (r.prev_edge_l1 + r.next_edge_l1);
    return r;
}

namespace {

Int cyclic_pos(Int idx, Int base, Int n) {
    Int d = (idx - base) % n;
    return d < 0 ? d + n : d;
}

// Does the open run (from_index, to_index) of an edge meet the segment
// positions [0, seg_len] (positions relative to the segment start)?
bool edge_interior_meets(const DigitalEdge& e, Int seg_first, Int seg_len, Int n) {
    if (e.l1_length < 2) return false;
    Int p0 = cyclic_pos(e.from_index + 1, seg_first, n);
    Int count = e.l1_length - 1;
    return p0 <= seg_len || p0 + count > n;
}

}  // namespace

EdgeSpanReport check_edge_span(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                      const SupportingEdgePair& pair) {
    const DigitalEdge& se = chain.edges[static_cast<std::size_t>(pair.edge_index)];
    const MaximalSegment& s = segments[static_cast<std::size_t>(pair.segment_index)];
    EdgeSpanReport r;
    if (se.slope_a == 0) return r;  // slope 0: no continued fraction
    r.complexity = cf_decompose(se.slope_a, se.slope_b).depth();
    if (r.complexity < 2) return r;
    r.applicable = true;

    const Int V = static_cast<Int>(chain.edges.size());
    Int n = 0;
    {
        // contour length
        for (const auto& e : chain.edges) n += e.l1_length;
    }
    const Int seg_first = ((s.first() % n) + n) % n;
    const Int seg_len = s.length();

    for (Int step = 1; step < V; ++step) {  // edges left of the supporting edge
        const DigitalEdge& e = chain.edges[static_cast<std::size_t>(
            ((pair.edge_index - step) % V + V) % V)];
        if (edge_interior_meets(e, seg_first, seg_len, n)) {
            ++r.left_edges;
        } else if (e.l1_length >= 2) {
            break;
        }
    }
    for (Int step = 1; step < V; ++step) {  // edges right of it
        const DigitalEdge& e = chain.edges[static_cast<std::size_t>((pair.edge_index + step) % V)];
        if (edge_interior_meets(e, seg_first, seg_len, n)) {
            ++r.right_edges;
        } else if (e.l1_length >= 2) {
            break;
        }
    }
    r.passed = r.left_edges <= r.complexity && r.right_edges <= r.complexity;
    return r;
}

SegmentContainmentReport check_segment_containment(const CdpChain& chain, const std::vector<MaximalSegment>& segments) {
    SegmentContainmentReport r;
    Int n = 0;
    for (const auto& e : chain.edges) n += e.l1_length;
    const Int base = chain.edges.front().from_index;
    for (std::size_t si = 0; si < segments.size(); ++si) {
        const auto& s = segments[si];
        Int first = base + cyclic_pos(s.first(), base, n);  // in [base, base + n)
        Int last = first + s.length();
        // locate the edge whose run contains `first`
        auto it = std::upper_bound(chain.edges.begin(), chain.edges.end(), first,
                                   [](Int v, const DigitalEdge& e) { return v < e.from_index; });
        const DigitalEdge& e = (it == chain.edges.begin()) ? chain.edges.back() : *(it - 1);
        if (first >= e.from_index && last <= e.to_index &&
            !(first == e.from_index && last == e.to_index)) {
            r.passed = false;
            r.segment_index = static_cast<Int>(si);
            r.edge_index = static_cast<Int>(&e - chain.edges.data());
            return r;
        }
    }
    return r;
}

LabelingReport check_labeling_bounds(const CdpChain& chain, const VertexLabeling& labeling,
                                     const std::vector<MaximalSegment>& segments, Int grid_size) {
    LabelingReport r;
    r.n2_bound_ok = labeling.n2 <= 2 * labeling.n22();
    const Int bound = max_edges_bound(std::max<Int>(grid_size, 2)).exact;
    r.n00_bound_ok = labeling.nij[0][0] <= (labeling.n1 + labeling.n2) * bound;
    Int per = 0;
    for (const auto& e : chain.edges) per += e.l1_length;
    Int min_ms = segments.empty() ? 0 : segments.front().length();
    for (const auto& s : segments) min_ms = std::min(min_ms, s.length());
    const Int denom = labeling.n1 + 2 * labeling.n22();
    r.min_ms_bound_ok = denom >= 1 && min_ms * denom <= 8 * per;
    r.passed = r.n2_bound_ok && r.n00_bound_ok && r.min_ms_bound_ok;
    return r;
}

CdpStats cdp_stats(const CdpChain& chain, const std::vector<MaximalSegment>& segments,
                   const VertexLabeling& labeling) {
    CdpStats st;
    st.n_e = chain.edge_count();
    for (const auto& e : chain.edges) st.per_l1 += e.l1_length;
    if (!segments.empty()) {
        st.ms_len_min = segments.front().length();
        st.ms_len_max = segments.front().length();
        double sum = 0;
        for (const auto& s : segments) {
            st.ms_len_min = std::min(st.ms_len_min, s.length());
            st.ms_len_max = std::max(st.ms_len_max, s.length());
            sum += static_cast<double>(s.length());
        }
        st.ms_len_mean = sum / static_cast<double>(segments.size());
    }
    st.n_1 = labeling.n1;
    st.n_22 = labeling.n22();
    const Int denom = labeling.n1 + 2 * labeling.n22();
    st.thm3_lhs = denom > 0 ? static_cast<double>(st.n_e) / static_cast<double>(denom) : 0.0;
    st.thm4_ratio = st.per_l1 > 0 ? static_cast<double>(st.ms_len_min) * static_cast<double>(st.n_e) /
                                        static_cast<double>(st.per_l1)
                                  : 0.0;
    return st;
}

}  // namespace maxseg
