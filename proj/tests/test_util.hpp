#pragma once

// Shared helpers for the test suites: independent brute-force oracles and
// small constructors. Everything here is deliberately naive.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "maxseg/contour.hpp"
#include "maxseg/dss.hpp"
#include "maxseg/lattice.hpp"
#include "maxseg/pattern.hpp"

namespace testutil {

using namespace maxseg;

// Points of a {0,1}-word embedded from the origin (duplicated from the
// library on purpose: the tests need their own path).
inline std::vector<LatticePoint> embed01(const std::string& w, LatticePoint origin = {0, 0}) {
    std::vector<LatticePoint> pts{origin};
    LatticePoint p = origin;
    for (char c : w) {
        if (c == '0')
            p.x += 1;
        else
            p.y += 1;
        pts.push_back(p);
    }
    return pts;
}

// Remainders of a pattern's points for line (a,b,0).
inline std::vector<Int> remainders(const std::vector<LatticePoint>& pts, Int a, Int b) {
    std::vector<Int> r;
    r.reserve(pts.size());
    for (auto p : pts) r.push_back(a * p.x - b * p.y);
    return r;
}

struct LeaningScan {
    LatticePoint u1, u2, l1, l2;
};

// First/last points of minimal and maximal remainder: the principal
// leaning points of the embedded run for line (a,b,mu=min).
inline LeaningScan leaning_scan(const std::vector<LatticePoint>& pts, Int a, Int b) {
    auto rs = remainders(pts, a, b);
    Int lo = *std::min_element(rs.begin(), rs.end());
    Int hi = *std::max_element(rs.begin(), rs.end());
    LeaningScan s{};
    bool fu = true, fl = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (rs[i] == lo) {
            if (fu) s.u1 = pts[i], fu = false;
            s.u2 = pts[i];
        }
        if (rs[i] == hi) {
            if (fl) s.l1 = pts[i], fl = false;
            s.l2 = pts[i];
        }
    }
    return s;
}

// Pixel set enclosed by a closed pointel contour, by even-odd counting of
// vertical edge crossings per row.
inline std::set<std::pair<Int, Int>> pixels_enclosed(const Contour& c) {
    std::map<Int, std::vector<Int>> crossings;  // row y+1/2 -> xs
    for (Int i = 0; i < c.size(); ++i) {
        LatticePoint p = c.point(i);
        char mv = c.move(i);
        if (mv == '1') crossings[p.y].push_back(p.x);
        if (mv == '3') crossings[p.y - 1].push_back(p.x);
    }
    std::set<std::pair<Int, Int>> pixels;
    for (auto& [y, xs] : crossings) {
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2)
            for (Int x = xs[k]; x < xs[k + 1]; ++x) pixels.insert({x, y});
    }
    return pixels;
}

inline std::set<std::pair<Int, Int>> to_set(const std::vector<LatticePoint>& pts) {
    std::set<std::pair<Int, Int>> s;
    for (auto p : pts) s.insert({p.x, p.y});
    return s;
}

// Feeds a point run through the incremental recognizer; returns the number
// of accepted points (including the seed).
inline Int recognizer_run(const std::vector<LatticePoint>& pts) {
    DssRecognizer rec(pts.front());
    Int n = 1;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!rec.extend_front(pts[i])) break;
        ++n;
    }
    return n;
}

}  // namespace testutil
