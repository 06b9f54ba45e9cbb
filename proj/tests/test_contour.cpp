#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxseg/contour.hpp"
#include "maxseg/shape.hpp"
#include "test_util.hpp"

using namespace maxseg;

TEST_CASE("single pixel traces to the unit square") {
    auto c = trace_contour(std::vector<LatticePoint>{{0, 0}});
    CHECK(c.size() == 4);
    CHECK(c.moves() == "0123");
    CHECK(c.start() == LatticePoint{0, 0});
}

TEST_CASE("plus shape traces to 12 moves") {
    // perimeter = 4*area - 2*adjacent pairs = 4*5 - 2*4
    std::vector<LatticePoint> plus{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    auto c = trace_contour(plus);
    CHECK(c.size() == 12);
    CHECK(testutil::pixels_enclosed(c) == testutil::to_set(plus));
    LatticeVector sum{0, 0};
    for (Int i = 0; i < c.size(); ++i) sum = sum + freeman_delta(c.move(i));
    CHECK(sum == LatticeVector{0, 0});
}

TEST_CASE("2x2 block traces to 8 moves") {
    std::vector<LatticePoint> block{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(trace_contour(block).size() == 8);
}

TEST_CASE("errors: empty and disconnected sets") {
    CHECK_THROWS_AS(trace_contour(std::vector<LatticePoint>{}), std::invalid_argument);
    std::vector<LatticePoint> split{{0, 0}, {2, 0}};
    CHECK_THROWS_AS(trace_contour(split), NotConnectedError);
}

TEST_CASE("contour invariants are validated") {
    CHECK_THROWS_AS(Contour::make({0, 0}, "02", false), std::invalid_argument);  // reversal
    CHECK_THROWS_AS(Contour::make({0, 0}, "01", true), std::invalid_argument);   // not closed
    CHECK_NOTHROW(Contour::make({0, 0}, "01", false));
}

TEST_CASE("enclosed pixels round-trip the digitized set") {
    for (auto r : {Rational(2, 5), Rational(1), Rational(3, 2), Rational(2), Rational(3)}) {
        for (Int m : {1, 2, 5, 16, 64}) {
            auto rows = digitize_rows(ShapeSpec::disk(r, Rational(1, 3), Rational(1, 7)), m);
            if (rows.empty()) continue;
            auto c = trace_contour(rows);
            CHECK(testutil::pixels_enclosed(c) == testutil::to_set(rows.points()));
        }
    }
}

TEST_CASE("convex contours use one two-letter alphabet per quadrant") {
    // Counterclockwise from the bottom-left extreme the alphabets succeed
    // each other as {3,0}, {0,1}, {1,2}, {2,3}.
    const char* alphabets[4] = {"30", "01", "12", "23"};
    for (Int m : {5, 9, 17}) {
        auto c = trace_contour(digitize_rows(ShapeSpec::ellipse(Rational(1), Rational(4, 7)), m));
        std::string mv = c.moves();
        std::size_t pos = 0;
        for (int block = 0; block < 4 && pos < mv.size(); ++block) {
            std::string_view allowed = alphabets[block];
            while (pos < mv.size() && allowed.find(mv[pos]) != std::string_view::npos) ++pos;
        }
        CHECK(pos == mv.size());
    }
}

TEST_CASE("points equal moves on closed contours and are distinct") {
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1)), 7));
    CHECK(static_cast<std::size_t>(c.size()) == c.moves().size());
    auto pts = c.points();
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
}

TEST_CASE("chain code round-trips byte-exactly") {
    auto c = trace_contour(digitize_rows(ShapeSpec::disk(Rational(1), Rational(1, 3)), 6));
    std::string text = to_chain_code(c);
    Contour back = from_chain_code(text);
    CHECK(to_chain_code(back) == text);
    CHECK(back.start() == c.start());
    CHECK(back.moves() == c.moves());
    CHECK(back.closed() == c.closed());

    Contour open = Contour::make({-3, 2}, "0011", false);
    CHECK(from_chain_code(to_chain_code(open)).closed() == false);

    CHECK_THROWS_AS(from_chain_code("start 0 0\n01\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_chain_code("start 0 0 closed 1"), std::invalid_argument);
}
