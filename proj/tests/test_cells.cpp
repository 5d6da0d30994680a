#include "polyo/cells.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <algorithm>
#include <set>

using namespace polyo;

TEST_CASE("cell complexes validate trivially as polyocollections") {
    auto p = fixtures::ring8().as_polyocollection();
    CHECK(p.size() == 8);
    CHECK(Polyocollection::validate(p.members()).valid());
}

TEST_CASE("simplicity and holes") {
    CellComplex square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(square.is_simple());

    auto report = fixtures::ring8().holes();
    CHECK_FALSE(report.simple);
    REQUIRE(report.holes.size() == 1);
    CHECK(report.holes[0] == std::vector<Point>{{2, 2}});

    CHECK(fixtures::pinwheel16().holes().holes.size() == 1);
    CHECK(fixtures::ring26().holes().holes.size() == 1);
    CHECK_FALSE(fixtures::ring_tower5().is_simple());
}

TEST_CASE("closed path detection") {
    auto ring = fixtures::ring8().closed_path();
    REQUIRE(ring.ok());
    CHECK(ring.sequence->size() == 8);
    // consecutive cells share an edge, cyclically
    const auto& seq = *ring.sequence;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Point a = seq[i], b = seq[(i + 1) % seq.size()];
        CHECK(std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1);
    }

    CellComplex square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto sq = square.closed_path();
    CHECK_FALSE(sq.ok());
    CHECK(sq.failure->reason == "size");

    CellComplex row({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    auto rr = row.closed_path();
    CHECK_FALSE(rr.ok());
    CHECK(rr.failure->reason == "degree");

    CHECK(fixtures::pinwheel16().closed_path().ok());
    CHECK(fixtures::ring26().closed_path().ok());

    // 3x3 full square: inner cell has four neighbours.
    std::vector<Point> full;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) full.push_back({x, y});
    CHECK_FALSE(CellComplex(full).closed_path().ok());
}

TEST_CASE("edge intervals") {
    CellComplex one({{0, 0}});
    auto h = one.edge_intervals(true);
    auto v = one.edge_intervals(false);
    REQUIRE(h.size() == 2);
    REQUIRE(v.size() == 2);
    CHECK(h[0] == Box{{0, 0}, {1, 0}});
    CHECK(h[1] == Box{{0, 1}, {1, 1}});

    CellComplex bar({{0, 0}, {1, 0}, {2, 0}});
    auto hb = bar.edge_intervals(true);
    REQUIRE(hb.size() == 2);
    CHECK(hb[0] == Box{{0, 0}, {3, 0}});
    CHECK(hb[1] == Box{{0, 1}, {3, 1}});
    CHECK(bar.edge_intervals(false).size() == 4);

    // Brute merge oracle on the ring.  On each of the four horizontal lines
    // every unit segment is an edge of a ring cell, so the line carries one
    // maximal interval: four per direction.
    auto oracle = [](const CellComplex& cc, bool horizontal) {
        std::set<Point> vs;
        for (Point v : cc.vertices()) vs.insert(v);
        std::vector<Box> out;
        auto is_edge = [&](Point a, bool horiz) {
            // unit segment from a in +x (horiz) or +y direction
            Point c1 = horiz ? Point{a.x, a.y - 1} : Point{a.x - 1, a.y};
            Point c2 = a;
            return cc.contains_cell(c1) || cc.contains_cell(c2);
        };
        for (Point v : vs) {
            Point step = horizontal ? Point{1, 0} : Point{0, 1};
            Point back{v.x - step.x, v.y - step.y};
            if (vs.count(back) && is_edge(back, horizontal)) continue;  // not a left endpoint
            if (!is_edge(v, horizontal)) continue;
            Point end = v;
            while (is_edge(end, horizontal)) end = {end.x + step.x, end.y + step.y};
            out.push_back(Box{v, end});
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(fixtures::ring8().edge_intervals(true) == oracle(fixtures::ring8(), true));
    CHECK(fixtures::ring8().edge_intervals(false) == oracle(fixtures::ring8(), false));
    CHECK(fixtures::ring8().edge_intervals(true).size() == 4);
    CHECK(fixtures::ring8().edge_intervals(false).size() == 4);
    CHECK(fixtures::ring26().edge_intervals(true) == oracle(fixtures::ring26(), true));
    CHECK(fixtures::ring26().edge_intervals(false) == oracle(fixtures::ring26(), false));
}

TEST_CASE("maximal blocks") {
    CellComplex bar({{0, 0}, {1, 0}, {2, 0}});
    auto hb = bar.maximal_blocks(true, 2);
    REQUIRE(hb.size() == 1);
    CHECK(hb[0].rank() == 3);
    CHECK(hb[0].extent() == Interval({0, 0}, {3, 1}));
    CHECK(bar.maximal_blocks(false, 2).empty());

    auto ring_h = fixtures::ring8().maximal_blocks(true, 2);
    REQUIRE(ring_h.size() == 2);  // bottom and top rows
    CHECK(ring_h[0].rank() == 3);
}

TEST_CASE("L-configurations") {
    auto ls = fixtures::ring8().find_L_configurations();
    CHECK(!ls.empty());
    CHECK(fixtures::ring8().has_L_configuration());

    CellComplex straight({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(straight.find_L_configurations().empty());
    CHECK_FALSE(straight.has_L_configuration());

    CHECK_FALSE(fixtures::pinwheel16().has_L_configuration());
    CHECK_FALSE(fixtures::ring26().has_L_configuration());
}

TEST_CASE("ladders") {
    // Staircase of four rank-2 horizontal blocks: contains a three-step ladder.
    CellComplex stairs({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}});
    auto ladders = stairs.find_ladders(3);
    CHECK(!ladders.empty());
    bool has3 = false;
    for (const auto& l : ladders)
        if (l.steps() == 3) has3 = true;
    CHECK(has3);
    CHECK(stairs.has_ladder(3));

    CellComplex straight({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(straight.find_ladders(2).empty());

    CHECK_FALSE(fixtures::pinwheel16().has_ladder(3));
    CHECK_FALSE(fixtures::ring26().has_ladder(3));
    // Two stacked horizontal strips offset by one: a two-step ladder, no third.
    CHECK(fixtures::ring26().has_ladder(2));
}

TEST_CASE("cell-based inner intervals agree with the generic polyocollection path") {
    for (const CellComplex& cc : {fixtures::ring8(), fixtures::ring_tower5(),
                                  CellComplex({{0, 0}, {1, 0}, {0, 1}, {1, 1}})}) {
        auto fast = cc.inner_intervals();
        auto generic = inner_intervals(cc.as_polyocollection());
        CHECK(fast == generic);
    }
}
