#include "maxseg/dss_oracle.hpp"

#include <algorithm>
#include <deque>

namespace maxseg {

namespace {

// Canonical slope enumeration: (a,b) ~ (-a,-b) describe the same line
// family, so enumerate b >= 1 with a in [-bound, bound], plus (1,0).
template <typename Fn>
void for_each_slope(Int bound, Fn&& fn) {
    fn(Int(1), Int(0));
    for (Int b = 1; b <= bound; ++b)
        for (Int a = -bound; a <= bound; ++a)
            if (gcd_nonneg(a, b) == 1) fn(a, b);
}

}  // namespace

std::optional<StandardLine> is_dss_oracle(std::span<const LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("is_dss_oracle: empty run");
    if (points.size() > 2000) throw std::invalid_argument("is_dss_oracle: run too long for the oracle");
    if (points.size() == 1) return StandardLine{0, 1, -points[0].y};
    for (std::size_t k = 1; k < points.size(); ++k)
        if (l1_norm(points[k] - points[k - 1]) != 1)
            throw std::invalid_argument("is_dss_oracle: points are not a 4-connected run");

    const Int bound = static_cast<Int>(points.size());
    std::optional<StandardLine> found;
    for_each_slope(bound, [&](Int a, Int b) {
        if (found) return;
        StandardLine line{a, b, 0};
        Int lo = line.remainder(points[0]);
        Int hi = lo;
        for (const auto& p : points) {
            Int r = line.remainder(p);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo <= line.width() - 1) found = StandardLine{a, b, lo};
    });
    return found;
}

namespace {

// For one slope, the largest window length starting at each index whose
// remainder range stays within the line width: one sliding-window pass
// with monotonic deques (over the unrolled sequence when cyclic).
void slide_slope(const Contour& c, Int a, Int b, std::vector<Int>& best_len) {
    const Int n = c.size();
    StandardLine line{a, b, 0};
    const Int w = line.width();
    std::deque<Int> minq, maxq;  // indices into r[], values monotone
    std::vector<Int> r(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = line.remainder(c.point(i));
    auto val = [&](Int idx) { return r[static_cast<std::size_t>(idx % n)]; };

    Int j = 0;  // window is [i, j)
    for (Int i = 0; i < n; ++i) {
        // a full wrap is never a DSS window; open runs stop at the end
        const Int cap = c.closed() ? n - 1 : n - i;
        if (j < i) {
            j = i;
            minq.clear();
            maxq.clear();
        }
        while (j - i < cap) {
            Int v = val(j);
            Int lo = minq.empty() ? v : std::min(v, val(minq.front()));
            Int hi = maxq.empty() ? v : std::max(v, val(maxq.front()));
            if (hi - lo > w - 1) break;
            while (!minq.empty() && val(minq.back()) >= v) minq.pop_back();
            minq.push_back(j);
            while (!maxq.empty() && val(maxq.back()) <= v) maxq.pop_back();
            maxq.push_back(j);
            ++j;
        }
        best_len[static_cast<std::size_t>(i)] =
            std::max(best_len[static_cast<std::size_t>(i)], j - i);
        if (!minq.empty() && minq.front() == i) minq.pop_front();
        if (!maxq.empty() && maxq.front() == i) maxq.pop_front();
    }
}

}  // namespace

std::vector<Int> oracle_front_table(const Contour& c) {
    const Int n = c.size();
    if (n > 600) throw std::invalid_argument("oracle_front_table: contour above oracle size cap");

    // Iterative deepening on the slope bound: a DSS of k points has a
    // witness with |a|,|b| <= k, so the enumeration is complete once the
    // longest window found is at least two short of the bound.
    Int bound = 16;
    std::vector<Int> best_len;
    while (true) {
        best_len.assign(static_cast<std::size_t>(n), c.closed() ? 2 : 1);
        for_each_slope(bound, [&](Int a, Int b) { slide_slope(c, a, b, best_len); });
        Int longest = *std::max_element(best_len.begin(), best_len.end());
        if (c.closed() && longest >= n - 1)
            throw DegenerateContourError("oracle_front_table: contour is one DSS");
        if (longest <= bound - 2 || bound >= n) break;
        bound = std::min(n, bound * 2);
    }

    std::vector<Int> front(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i)
        front[static_cast<std::size_t>(i)] = i + best_len[static_cast<std::size_t>(i)] - 1;
    return front;
}

std::vector<MaximalSegment> oracle_maximal_segments(const Contour& c) {
    const Int n = c.size();
    std::vector<Int> front = oracle_front_table(c);
    std::vector<MaximalSegment> out;
    for (Int i = 0; i < n; ++i) {
        Int prev_front;
        if (i > 0)
            prev_front = front[static_cast<std::size_t>(i - 1)];
        else
            prev_front = c.closed() ? front[static_cast<std::size_t>(n - 1)] - n : Int(-1);
        Int cur_front = front[static_cast<std::size_t>(i)];
        if (prev_front >= cur_front) continue;  // run i..F(i) extends backward

        std::vector<LatticePoint> run;
        run.reserve(static_cast<std::size_t>(cur_front - i + 1));
        for (Int k = i; k <= cur_front; ++k) run.push_back(c.point(k));
        auto line = is_dss_oracle(run);
        if (!line) throw std::logic_error("oracle_maximal_segments: window is not a DSS");

        DssWitness w;
        w.line = *line;
        w.first = i;
        w.last = cur_front;
        Int lo = line->mu, hi = line->mu + line->width() - 1;
        bool first_u = true, first_l = true;
        for (const auto& p : run) {
            Int r = line->remainder(p);
            if (r == lo) {
                if (first_u) w.u1 = p, first_u = false;
                w.u2 = p;
            }
            if (r == hi) {
                if (first_l) w.l1 = p, first_l = false;
                w.l2 = p;
            }
        }
        out.push_back({w});
    }
    return out;
}

}  // namespace maxseg
