#include "maxseg/contour.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <unordered_set>

namespace maxseg {

Contour Contour::make(LatticePoint start, std::string mvs, bool closed) {
    if (mvs.empty()) throw std::invalid_argument("contour: no moves");
    Contour c;
    c.closed_ = closed;
    const Int n = static_cast<Int>(mvs.size());
    c.points_.reserve(static_cast<std::size_t>(closed ? n : n + 1));
    LatticePoint p = start;
    for (Int i = 0; i < n; ++i) {
        char mv = mvs[static_cast<std::size_t>(i)];
        if (i > 0 && mv == freeman_opposite(mvs[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("contour: consecutive moves reverse");
        c.points_.push_back(p);
        p = p + freeman_delta(mv);
    }
    if (closed) {
        if (!(p == start)) throw std::invalid_argument("contour: closed but does not return to start");
        if (mvs.back() == freeman_opposite(mvs.front()))
            throw std::invalid_argument("contour: consecutive moves reverse at wrap");
    } else {
        c.points_.push_back(p);
    }
    c.moves_ = std::move(mvs);
    return c;
}

namespace {

// Boundary edge predicate for an interior-left (counterclockwise) walk:
// the move d from pointel v follows a unit edge whose left pixel is inside
// and right pixel is outside.
template <typename Inside>
bool boundary_move(const Inside& in, LatticePoint v, int d) {
    switch (d) {
        case 0: return in(v.x, v.y) && !in(v.x, v.y - 1);
        case 1: return in(v.x - 1, v.y) && !in(v.x, v.y);
        case 2: return in(v.x - 1, v.y - 1) && !in(v.x - 1, v.y);
        case 3: return in(v.x, v.y - 1) && !in(v.x - 1, v.y - 1);
        default: return false;
    }
}

template <typename Inside>
Contour walk_boundary(const Inside& in, LatticePoint start_pixel) {
    // The SW corner of the lexicographically smallest pixel is the
    // lexicographically smallest boundary pointel.
    const LatticePoint v0{start_pixel.x, start_pixel.y};
    std::string moves;
    LatticePoint v = v0;
    int dir = 0;
    if (!boundary_move(in, v, dir))
        throw std::logic_error("trace_contour: start vertex has no +x boundary edge");
    std::unordered_set<LatticePoint, LatticePointHash> seen;
    do {
        if (!seen.insert(v).second)
            throw std::logic_error("trace_contour: boundary vertex visited twice");
        moves.push_back(static_cast<char>('0' + dir));
        v = v + freeman_delta(static_cast<char>('0' + dir));
        if (v == v0) break;
        int next = -1;
        for (int turn : {1, 0, 3}) {  // left, straight, right
            int cand = (dir + turn) & 3;
            if (boundary_move(in, v, cand)) {
                next = cand;
                break;
            }
        }
        if (next < 0) throw std::logic_error("trace_contour: walk stuck");
        dir = next;
    } while (true);
    return Contour::make(v0, std::move(moves), true);
}

}  // namespace

Contour trace_contour(const std::vector<LatticePoint>& pixels) {
    if (pixels.empty()) throw std::invalid_argument("trace_contour: empty pixel set");
    std::unordered_set<LatticePoint, LatticePointHash> set(pixels.begin(), pixels.end());

    // 4-connectivity check.
    std::deque<LatticePoint> queue{pixels.front()};
    std::unordered_set<LatticePoint, LatticePointHash> reached{pixels.front()};
    while (!queue.empty()) {
        LatticePoint p = queue.front();
        queue.pop_front();
        for (auto d : {LatticeVector{1, 0}, LatticeVector{-1, 0}, LatticeVector{0, 1},
                       LatticeVector{0, -1}}) {
            LatticePoint q = p + d;
            if (set.contains(q) && reached.insert(q).second) queue.push_back(q);
        }
    }
    if (reached.size() != set.size())
        throw NotConnectedError("trace_contour: pixel set is not 4-connected");

    LatticePoint smallest = *std::min_element(pixels.begin(), pixels.end());
    auto in = [&set](Int x, Int y) { return set.contains(LatticePoint{x, y}); };
    return walk_boundary(in, smallest);
}

Contour trace_contour(const DigitizedRows& rows) {
    if (rows.empty()) throw std::invalid_argument("trace_contour: empty pixel set");
    for (std::size_t i = 1; i < rows.rows.size(); ++i) {
        const auto& a = rows.rows[i - 1];
        const auto& b = rows.rows[i];
        if (b.x_min > a.x_max || b.x_max < a.x_min)
            throw NotConnectedError("trace_contour: consecutive rows do not overlap");
    }
    // Lexicographic minimum over (x, y): scan all rows.
    LatticePoint smallest{rows.rows.front().x_min, rows.rows.front().y};
    for (const auto& r : rows.rows)
        if (r.x_min < smallest.x || (r.x_min == smallest.x && r.y < smallest.y))
            smallest = {r.x_min, r.y};
    auto in = [&rows](Int x, Int y) { return rows.contains(x, y); };
    return walk_boundary(in, smallest);
}

std::string to_chain_code(const Contour& c) {
    std::string out = "start " + std::to_string(c.start().x) + " " + std::to_string(c.start().y) +
                      " closed " + (c.closed() ? "1" : "0") + "\n";
    out += c.moves();
    out += '\n';
    return out;
}

Contour from_chain_code(std::string_view text) {
    auto fail = []() -> Contour { throw std::invalid_argument("chain code: malformed input"); };
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) return fail();
    std::string_view header = text.substr(0, nl);
    std::string_view rest = text.substr(nl + 1);
    std::size_t nl2 = rest.find('\n');
    if (nl2 == std::string_view::npos) return fail();
    std::string moves(rest.substr(0, nl2));
    if (!rest.substr(nl2 + 1).empty()) return fail();

    Int x = 0, y = 0;
    int closed_flag = -1;
    if (!header.starts_with("start ")) return fail();
    header.remove_prefix(6);
    auto parse_int = [&](Int& out_val) {
        auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), out_val);
        if (ec != std::errc()) return false;
        header.remove_prefix(static_cast<std::size_t>(ptr - header.data()));
        return true;
    };
    if (!parse_int(x)) return fail();
    if (!header.starts_with(" ")) return fail();
    header.remove_prefix(1);
    if (!parse_int(y)) return fail();
    if (!header.starts_with(" closed ")) return fail();
    header.remove_prefix(8);
    if (header == "0")
        closed_flag = 0;
    else if (header == "1")
        closed_flag = 1;
    else
        return fail();
    return Contour::make({x, y}, std::move(moves), closed_flag == 1);
}

}  // namespace maxseg
