#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxseg/dss.hpp"
#include "maxseg/dss_oracle.hpp"
#include "maxseg/shape.hpp"
#include "test_util.hpp"

using namespace maxseg;
using testutil::embed01;

namespace {

Contour disk_contour(Int m, Rational cx = Rational(0), Rational cy = Rational(0)) {
    return trace_contour(digitize_rows(ShapeSpec::disk(Rational(1), cx, cy), m));
}

void check_witness_invariants(const Contour& c, const MaximalSegment& s) {
    const auto& w = s.witness;
    const Int width = w.line.width();
    CHECK(gcd_nonneg(w.line.a, w.line.b) == 1);
    for (Int i = w.first; i <= w.last; ++i) {
        Int r = w.line.remainder(c.point(i));
        CHECK(w.line.mu <= r);
        CHECK(r < w.line.mu + width);
    }
    CHECK(w.line.remainder(w.u1) == w.line.mu);
    CHECK(w.line.remainder(w.u2) == w.line.mu);
    CHECK(w.line.remainder(w.l1) == w.line.mu + width - 1);
    CHECK(w.line.remainder(w.l2) == w.line.mu + width - 1);
}

}  // namespace

TEST_CASE("remainder examples for line (2,5,0)") {
    StandardLine line{2, 5, 0};
    CHECK(line.remainder({0, 0}) == 0);
    CHECK(line.remainder({3, 1}) == 1);
    CHECK(line.remainder({3, 0}) == 6);  // lower leaning: mu + |a| + |b| - 1
}

TEST_CASE("oracle finds the witness of pattern 0001001") {
    auto pts = embed01("0001001");
    auto line = is_dss_oracle(pts);
    REQUIRE(line.has_value());
    // Any witness is acceptable; it must contain every point.
    for (auto p : pts) CHECK(line->contains(p));
    // The canonical characteristics are (2,5): check the slope ratio.
    CHECK(line->a * 5 == line->b * 2);
}

TEST_CASE("oracle conventions and rejections") {
    std::vector<LatticePoint> single{{4, -2}};
    auto line = is_dss_oracle(single);
    REQUIRE(line.has_value());
    CHECK(*line == StandardLine{0, 1, 2});

    // A staircase followed by a thick corner is not a DSS.
    auto pts = embed01("01010011");
    bool straight = is_dss_oracle(pts).has_value();
    CHECK(!straight);

    std::vector<LatticePoint> gap{{0, 0}, {2, 0}};
    CHECK_THROWS_AS(is_dss_oracle(gap), std::invalid_argument);
    CHECK_THROWS_AS(is_dss_oracle(std::span<const LatticePoint>{}), std::invalid_argument);
}

TEST_CASE("recognizer accepts straight runs unchanged") {
    DssRecognizer rec({0, 0});
    CHECK(rec.extend_front({1, 0}));
    CHECK(rec.extend_front({2, 0}));
    CHECK(rec.line() == StandardLine{0, 1, 0});
    CHECK(rec.u1() == LatticePoint{0, 0});
    CHECK(rec.u2() == LatticePoint{2, 0});
}

TEST_CASE("recognizer reproduces the pattern witness point by point") {
    auto pts = embed01("0001001");
    DssRecognizer rec(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        REQUIRE(rec.extend_front(pts[i]));
        // Every prefix must agree with the brute-force oracle.
        std::span<const LatticePoint> prefix(pts.data(), i + 1);
        CHECK(is_dss_oracle(prefix).has_value());
    }
    CHECK(rec.line() == StandardLine{2, 5, 0});
    CHECK(rec.u2() == LatticePoint{5, 2});
    CHECK(rec.l1() == LatticePoint{3, 0});
}

TEST_CASE("recognizer rejects what the oracle rejects, prefix by prefix") {
    for (const char* word : {"01010011", "00110", "000100010001", "0101010101",
                             "001001000100001", "011011"}) {
        auto pts = embed01(word);
        Int accepted = testutil::recognizer_run(pts);
        // The accepted prefix is a DSS and the next prefix is not.
        std::span<const LatticePoint> ok(pts.data(), static_cast<std::size_t>(accepted));
        CHECK(is_dss_oracle(ok).has_value());
        if (accepted < static_cast<Int>(pts.size())) {
            std::span<const LatticePoint> bad(pts.data(), static_cast<std::size_t>(accepted) + 1);
            CHECK(!is_dss_oracle(bad).has_value());
        }
    }
}

TEST_CASE("recognizer rejects a drop below the band after two full patterns") {
    auto pts = embed01("00010010001001");  // pattern (2,5) twice
    DssRecognizer rec(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) REQUIRE(rec.extend_front(pts[i]));
    CHECK(rec.line() == StandardLine{2, 5, 0});
    LatticePoint above = rec.front_point() + LatticeVector{0, 1};  // remainder drops to mu - 5
    CHECK(!rec.extend_front(above));
    auto run = pts;
    run.push_back(above);
    CHECK(!is_dss_oracle(run).has_value());
}

TEST_CASE("recognizer equals the oracle on random two-letter walks") {
    // Deterministic LCG; words drawn over a random adjacent-letter pair so
    // the runs stay reversal-free like contour windows.
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 33);
    };
    for (int trial = 0; trial < 400; ++trial) {
        int base = static_cast<int>(next() % 4);
        std::string moves;
        int len = 4 + static_cast<int>(next() % 40);
        for (int i = 0; i < len; ++i)
            moves.push_back(static_cast<char>('0' + (next() % 2 ? base : (base + 1) % 4)));
        std::vector<LatticePoint> pts{{0, 0}};
        for (char mv : moves) pts.push_back(pts.back() + freeman_delta(mv));
        Int accepted = testutil::recognizer_run(pts);
        std::span<const LatticePoint> ok(pts.data(), static_cast<std::size_t>(accepted));
        CHECK(is_dss_oracle(ok).has_value());
        if (accepted < static_cast<Int>(pts.size())) {
            std::span<const LatticePoint> bad(pts.data(), static_cast<std::size_t>(accepted) + 1);
            CHECK(!is_dss_oracle(bad).has_value());
        }
    }
}

TEST_CASE("recognizer rejection leaves the state unchanged") {
    auto pts = embed01("000100");
    DssRecognizer rec(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) REQUIRE(rec.extend_front(pts[i]));
    auto line = rec.line();
    auto u1 = rec.u1(), u2 = rec.u2(), l1 = rec.l1(), l2 = rec.l2();
    LatticePoint bad = rec.front_point() + LatticeVector{0, -1};  // drops below the band
    CHECK(!rec.extend_front(bad));
    CHECK(rec.line() == line);
    CHECK(rec.u1() == u1);
    CHECK(rec.u2() == u2);
    CHECK(rec.l1() == l1);
    CHECK(rec.l2() == l2);
    CHECK_THROWS_AS(rec.extend_front({100, 100}), std::invalid_argument);
}

TEST_CASE("recognizer matches the oracle on every contour prefix window") {
    auto c = disk_contour(8);
    const Int n = c.size();
    for (Int i = 0; i < n; i += 3) {
        // grow from i and compare acceptance with the oracle at each step
        std::vector<LatticePoint> run{c.point(i)};
        DssRecognizer rec(c.point(i));
        for (Int j = i + 1; j < i + n - 1; ++j) {
            run.push_back(c.point(j));
            bool engine = rec.extend_front(c.point(j));
            bool oracle = is_dss_oracle(run).has_value();
            CHECK(engine == oracle);
            if (!engine) break;
        }
    }
}

TEST_CASE("front and back against the oracle on small disks") {
    for (Int m : {5, 8, 12}) {
        auto c = disk_contour(m);
        auto of = oracle_front_table(c);
        for (Int i = 0; i < c.size(); ++i) {
            CHECK(front(c, i) == of[static_cast<std::size_t>(i)]);
            CHECK(front(c, back(c, i)) >= i);  // definitional consequence
        }
    }
}

TEST_CASE("oracle maximal segments on an open straight run") {
    Contour open = Contour::make({0, 0}, "00000000", false);
    auto segs = oracle_maximal_segments(open);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].first() == 0);
    CHECK(segs[0].last() == open.size() - 1);
}

TEST_CASE("front and back on open straight runs") {
    Contour open = Contour::make({0, 0}, "000000", false);
    CHECK(front(open, 0) == 6);
    CHECK(back(open, 6) == 0);
    CHECK_THROWS_AS(front(open, 7), std::invalid_argument);
    CHECK_THROWS_AS(front(open, -1), std::invalid_argument);
}

TEST_CASE("maximal segments equal the oracle list on disks") {
    for (Int m : {5, 8, 16, 32}) {
        for (auto cx : {Rational(0), Rational(1, 3)}) {
            auto c = disk_contour(m, cx, cx == Rational(0) ? Rational(0) : Rational(1, 7));
            auto eng = maximal_segments(c);
            auto orc = oracle_maximal_segments(c);
            REQUIRE(eng.size() == orc.size());
            for (std::size_t k = 0; k < eng.size(); ++k) {
                CHECK(eng[k].first() == orc[k].first());
                CHECK(eng[k].last() == orc[k].last());
            }
        }
    }
}

TEST_CASE("maximal segment structural invariants") {
    auto c = disk_contour(12);
    auto segs = maximal_segments(c);
    const Int n = c.size();
    REQUIRE(segs.size() >= 2);
    for (std::size_t k = 0; k < segs.size(); ++k) {
        check_witness_invariants(c, segs[k]);
        const auto& nxt = segs[(k + 1) % segs.size()];
        if (k + 1 < segs.size()) {
            CHECK(segs[k].first() < nxt.first());  // no nesting
            CHECK(segs[k].last() < nxt.last());
        }
    }
    // Coverage: every index lies in a maximal segment (the two canonical
    // covering segments of a point may coincide).
    for (Int i = 0; i < n; ++i) {
        int cover = 0;
        for (const auto& s : segs) cover += s.covers(i, n) ? 1 : 0;
        CHECK(cover >= 1);
    }
    // Definitional coverage by [B(j), F(B(j))] and [B(F(i)), F(i)].
    for (Int i = 0; i < n; i += 5) {
        Int f = front(c, i), b = back(c, i);
        bool covered1 = false, covered2 = false;
        for (const auto& s : segs) {
            if (c.wrap(s.first()) == c.wrap(back(c, f)) && c.wrap(s.last()) == c.wrap(f))
                covered1 = true;
            if (c.wrap(s.first()) == c.wrap(b) && c.wrap(s.last()) == c.wrap(front(c, b)))
                covered2 = true;
        }
        CHECK(covered1);
        CHECK(covered2);
    }
}

TEST_CASE("maximal segment preconditions") {
    auto square = trace_contour(std::vector<LatticePoint>{{0, 0}});
    CHECK_THROWS_AS(maximal_segments(square), std::invalid_argument);  // 4 < 5 points
    Contour open = Contour::make({0, 0}, "000100", false);
    CHECK_THROWS_AS(maximal_segments(open), std::invalid_argument);
}

TEST_CASE("upper leaning class is the outward side on CCW contours") {
    auto c = disk_contour(10);
    auto segs = maximal_segments(c);
    // The contour wraps a disk centered near the origin: outward means
    // farther from the center, so the average upper-leaning point must be
    // farther out than the average lower-leaning point.
    for (const auto& s : segs) {
        const auto& w = s.witness;
        auto r2 = [](LatticePoint p) { return p.x * p.x + p.y * p.y; };
        CHECK(r2(w.u1) + r2(w.u2) >= r2(w.l1) + r2(w.l2));
    }
}

TEST_CASE("front-back table agrees with direct extension") {
    auto c = disk_contour(9);
    auto segs = maximal_segments(c);
    auto table = front_back_table(c, segs);
    for (Int i = 0; i < c.size(); ++i) {
        CHECK(i + table.dist_front[static_cast<std::size_t>(i)] == front(c, i));
        CHECK(i - table.dist_back[static_cast<std::size_t>(i)] == back(c, i));
    }
}
