#include "polyo/geometry.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <algorithm>
#include <set>

using namespace polyo;

namespace {

bool contains_interval(const std::vector<Interval>& list, Interval iv) {
    return std::find(list.begin(), list.end(), iv) != list.end();
}

// Exhaustive inner-interval oracle: every box over V(C) x V(C), coverage
// decided by brute unit-square rasterisation.
std::vector<Interval> inner_intervals_bruteforce(const Polyocollection& c) {
    std::vector<Interval> out;
    const auto& vs = c.vertices();
    for (Point a : vs)
        for (Point b : vs) {
            if (!lt_strict(a, b)) continue;
            bool inner = true;
            for (int x = a.x; x < b.x && inner; ++x)
                for (int y = a.y; y < b.y && inner; ++y) {
                    // midpoint square [x,x+1]x[y,y+1] must be inside a member of the cover
                    bool covered = false;
                    for (const auto& m : c.members())
                        if (Box{a, b}.contains(m.box()) && m.ll.x <= x && x + 1 <= m.ur.x &&
                            m.ll.y <= y && y + 1 <= m.ur.y) {
                            covered = true;
                            break;
                        }
                    inner = covered;
                }
            if (inner) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// All exact tilings of an inner interval by subsets of members with pairwise
// disjoint interiors, by exhaustive subset search.
void all_tilings(const Polyocollection& c, const Interval& target,
                 std::vector<std::vector<Interval>>& found) {
    std::vector<Interval> inside;
    for (const auto& m : c.members())
        if (target.contains(m)) inside.push_back(m);
    std::vector<Interval> chosen;
    auto disjoint_interiors = [](const Interval& a, const Interval& b) {
        auto o = intersect(a.box(), b.box());
        if (!o) return true;
        return o->lo.x == o->hi.x || o->lo.y == o->hi.y;
    };
    auto area_sum = [](const std::vector<Interval>& list) {
        long long s = 0;
        for (const auto& m : list) s += m.area();
        return s;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (area_sum(chosen) == target.area()) {
            // exact area + disjoint interiors + all inside => cover
            found.push_back(chosen);
            return;
        }
        if (i == inside.size()) return;
        self(self, i + 1);
        bool ok = true;
        for (const auto& prev : chosen)
            if (!disjoint_interiors(prev, inside[i])) ok = false;
        if (ok) {
            chosen.push_back(inside[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& t : found) std::sort(t.begin(), t.end());
}

}  // namespace

TEST_CASE("interval corners and edges") {
    Interval iv({1, 1}, {3, 4});
    CHECK(iv.ul() == Point{1, 4});
    CHECK(iv.lr() == Point{3, 1});
    CHECK(iv.opposite_corner({1, 1}) == Point{3, 4});
    CHECK(iv.opposite_corner({1, 4}) == Point{3, 1});
    auto edges = iv.edges();
    CHECK(edges[0] == Box{{1, 1}, {1, 4}});
    CHECK(edges[1] == Box{{1, 1}, {3, 1}});
    CHECK(edges[2] == Box{{3, 1}, {3, 4}});
    CHECK(edges[3] == Box{{1, 4}, {3, 4}});
    CHECK_THROWS_AS(Interval({2, 2}, {2, 3}), input_error);
    CHECK_THROWS_AS(Interval({2, 2}, {1, 1}), input_error);
}

TEST_CASE("validate: example collections") {
    CHECK(Polyocollection::validate(fixtures::c1()).valid());
    CHECK(Polyocollection::validate(fixtures::c2()).valid());
    CHECK(Polyocollection::validate(fixtures::c4()).valid());
    CHECK(Polyocollection::validate({Interval({0, 0}, {1, 1})}).valid());

    auto r3 = Polyocollection::validate(fixtures::c3());
    CHECK_FALSE(r3.valid());
    bool witness = false;
    for (const auto& v : r3.violations)
        if ((v.first == Interval({2, 1}, {4, 3}) && v.second == Interval({4, 1}, {5, 2})) ||
            (v.second == Interval({2, 1}, {4, 3}) && v.first == Interval({4, 1}, {5, 2})))
            witness = true;
    CHECK(witness);
    // The non-aligned overlapping pair explicitly allowed by the definition
    // must not be reported.
    for (const auto& v : r3.violations) {
        CHECK_FALSE((v.first == Interval({1, 2}, {3, 4}) && v.second == Interval({2, 1}, {4, 3})));
    }
}

TEST_CASE("validate: containment and duplicate handling") {
    auto r = Polyocollection::validate({Interval({0, 0}, {3, 3}), Interval({1, 1}, {2, 2})});
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front().kind == ViolationKind::Containment);
    CHECK_THROWS_AS(Polyocollection::validate({Interval({0, 0}, {1, 1}), Interval({0, 0}, {1, 1})}),
                    input_error);
}

TEST_CASE("validate -> canonical order round-trip is identity") {
    auto c = Polyocollection::of(fixtures::c1());
    auto again = Polyocollection::of(c.members());
    CHECK(c.members() == again.members());
    CHECK(std::is_sorted(c.members().begin(), c.members().end()));
}

TEST_CASE("inner intervals of C1, C2, C4") {
    auto g1 = inner_intervals(Polyocollection::of(fixtures::c1()));
    CHECK(contains_interval(g1, Interval({1, 1}, {2, 3})));
    CHECK(contains_interval(g1, Interval({1, 1}, {5, 3})));

    auto g2 = inner_intervals(Polyocollection::of(fixtures::c2()));
    CHECK(contains_interval(g2, Interval({1, 3}, {7, 5})));
    CHECK(contains_interval(g2, Interval({3, 2}, {5, 7})));
    CHECK_FALSE(contains_interval(g2, Interval({3, 3}, {5, 5})));

    auto g4 = inner_intervals(Polyocollection::of(fixtures::c4()));
    CHECK(contains_interval(g4, Interval({1, 1}, {5, 5})));
}

TEST_CASE("inner intervals of D: exactly the five members plus one") {
    auto c = Polyocollection::of(fixtures::d());
    auto g = inner_intervals(c);
    CHECK(g.size() == 6);
    for (const auto& m : c.members()) CHECK(contains_interval(g, m));
    CHECK(contains_interval(g, Interval({2, 3}, {4, 4})));
    CHECK(g == inner_intervals_bruteforce(c));
}

TEST_CASE("inner intervals: empty collection, members always inner") {
    CHECK(inner_intervals(Polyocollection()).empty());
    for (auto& make : {fixtures::c1, fixtures::c2, fixtures::c4, fixtures::d}) {
        auto c = Polyocollection::of(make());
        auto g = inner_intervals(c);
        for (const auto& m : c.members()) CHECK(contains_interval(g, m));
        CHECK(g == inner_intervals_bruteforce(c));
    }
}

TEST_CASE("tiling witness: C4 big square avoids the middle member") {
    auto c = Polyocollection::of(fixtures::c4());
    auto w = tiling_witness(c, Interval({1, 1}, {5, 5}));
    std::vector<Interval> expected = {Interval({1, 1}, {3, 3}), Interval({1, 3}, {3, 5}),
                                      Interval({3, 1}, {5, 3}), Interval({3, 3}, {5, 5})};
    std::sort(expected.begin(), expected.end());
    CHECK(w == expected);
}

TEST_CASE("tiling witness: member tiles itself; non-inner rejected") {
    auto c = Polyocollection::of(fixtures::c1());
    for (const auto& m : c.members()) CHECK(tiling_witness(c, m) == std::vector<Interval>{m});
    CHECK_THROWS_AS(tiling_witness(c, Interval({0, 0}, {9, 9})), input_error);
}

TEST_CASE("tiling witness of D's composite matches exhaustive search") {
    auto c = Polyocollection::of(fixtures::d());
    Interval target({2, 3}, {4, 4});
    auto w = tiling_witness(c, target);
    std::vector<Interval> expected = {Interval({2, 3}, {3, 4}), Interval({3, 3}, {4, 4})};
    CHECK(w == expected);
    std::vector<std::vector<Interval>> tilings;
    all_tilings(c, target, tilings);
    REQUIRE(tilings.size() == 1);
    CHECK(tilings.front() == w);
}

TEST_CASE("every inner interval of every fixture admits a disjoint tiling") {
    for (auto& make : {fixtures::c1, fixtures::c2, fixtures::c4, fixtures::d}) {
        auto c = Polyocollection::of(make());
        for (const auto& iv : inner_intervals(c)) {
            auto w = tiling_witness(c, iv);
            long long area = 0;
            for (const auto& m : w) area += m.area();
            CHECK(area == iv.area());
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    auto o = intersect(w[i].box(), w[j].box());
                    if (o) CHECK((o->lo.x == o->hi.x || o->lo.y == o->hi.y));
                }
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(Polyocollection()).empty());

    auto two = Polyocollection::of({Interval({0, 0}, {1, 1}), Interval({10, 10}, {11, 11})});
    CHECK(connected_components(two).size() == 2);

    // (2,2)-(5,3) and (5,3)-(7,4) share the vertex (5,3).
    auto c1 = Polyocollection::of(fixtures::c1());
    CHECK(connected_components(c1).size() == 1);

    // C4: the tilted middle member shares points but no vertices with the
    // four corner members.
    auto c4 = Polyocollection::of(fixtures::c4());
    auto comps = connected_components(c4);
    CHECK(comps.size() == 2);

    // Union-find oracle on shared vertices.
    for (auto& make : {fixtures::c1, fixtures::c2, fixtures::c4, fixtures::d}) {
        auto c = Polyocollection::of(make());
        auto comps2 = connected_components(c);
        std::size_t total = 0;
        for (const auto& comp : comps2) {
            total += comp.size();
            for (const auto& other : comps2) {
                if (&comp == &other) continue;
                std::set<Point> va, vb;
                for (const auto& m : comp.members())
                    for (Point v : m.vertices()) va.insert(v);
                for (const auto& m : other.members())
                    for (Point v : m.vertices()) vb.insert(v);
                for (Point v : va) CHECK_FALSE(vb.count(v));
            }
        }
        CHECK(total == c.size());
    }
}
