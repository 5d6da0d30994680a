#include "polyo/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polyo {

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.ll) + "," + to_string(iv.ur) + "]";
}

std::string to_string(const Violation& v) {
    const char* kind = v.kind == ViolationKind::Containment ? "containment" : "edge overlap";
    return std::string(kind) + ": " + to_string(v.first) + " vs " + to_string(v.second);
}

std::optional<Box> intersect(const Box& a, const Box& b) {
    Point lo = join(a.lo, b.lo);
    Point hi = meet(a.hi, b.hi);
    if (!leq(lo, hi)) return std::nullopt;
    return Box{lo, hi};
}

Interval::Interval(Point a, Point b) : ll(a), ur(b) {
    if (!is_proper(a, b))
        throw input_error("interval " + to_string(Box{a, b}.lo) + ".." + to_string(b) +
                          " is not proper (need ll < ur in both coordinates)");
}

std::array<Box, 4> Interval::edges() const {
    Point c = ul(), d = lr();
    return {Box{ll, c}, Box{ll, d}, Box{d, ur}, Box{c, ur}};
}

bool Interval::is_corner(Point v) const {
    return v == ll || v == ur || v == ul() || v == lr();
}

Point Interval::opposite_corner(Point v) const {
    if (v == ll) return ur;
    if (v == ur) return ll;
    if (v == ul()) return lr();
    if (v == lr()) return ul();
    throw input_error("point " + to_string(v) + " is not a corner of " + to_string(*this));
}

std::array<Point, 2> Interval::adjacent_corners(Point v) const {
    if (v == ll) return {ul(), lr()};
    if (v == ur) return {ul(), lr()};
    if (v == ul()) return {ll, ur};
    if (v == lr()) return {ll, ur};
    throw input_error("point " + to_string(v) + " is not a corner of " + to_string(*this));
}

bool point_on_box_boundary(const Box& b, Point p) {
    if (!b.contains(p)) return false;
    return p.x == b.lo.x || p.x == b.hi.x || p.y == b.lo.y || p.y == b.hi.y;
}

namespace {

// The two collection axioms for a pair of distinct members.
std::optional<ViolationKind> check_pair(const Interval& i, const Interval& j) {
    if (i.contains(j) || j.contains(i)) return ViolationKind::Containment;
    auto meet_box = intersect(i.box(), j.box());
    if (!meet_box) return std::nullopt;
    // Common edge of both?
    auto ei = i.edges(), ej = j.edges();
    for (const Box& f : ei)
        for (const Box& g : ej)
            if (f == g && f == *meet_box) return std::nullopt;
    for (const Box& f : ei)
        for (const Box& g : ej) {
            auto o = intersect(f, g);
            if (o && o->lattice_points() > 1) return ViolationKind::EdgeOverlap;
        }
    return std::nullopt;
}

}  // namespace

ValidationResult Polyocollection::validate(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t k = 1; k < intervals.size(); ++k)
        if (intervals[k] == intervals[k - 1])
            throw input_error("duplicate interval " + to_string(intervals[k]));

    ValidationResult result;
    for (std::size_t a = 0; a < intervals.size(); ++a)
        for (std::size_t b = a + 1; b < intervals.size(); ++b)
            if (auto kind = check_pair(intervals[a], intervals[b]))
                result.violations.push_back({intervals[a], intervals[b], *kind});
    if (result.violations.empty()) result.collection = Polyocollection(std::move(intervals));
    return result;
}

Polyocollection Polyocollection::of(std::vector<Interval> intervals) {
    auto r = validate(std::move(intervals));
    if (!r.valid())
        throw input_error("not a polyocollection, first violation: " + to_string(r.violations.front()));
    return *std::move(r.collection);
}

const std::vector<Point>& Polyocollection::vertices() const {
    if (vertices_.empty() && !members_.empty()) {
        std::set<Point> seen;
        for (const auto& m : members_)
            for (Point v : m.vertices()) seen.insert(v);
        vertices_.assign(seen.begin(), seen.end());
    }
    return vertices_;
}

namespace {

// Exact coverage test on the grid refinement induced by the members inside
// the candidate box: every elementary rectangle must lie in some member.
bool covered_by(const Box& target, const std::vector<Interval>& inside) {
    std::vector<int> xs{target.lo.x, target.hi.x};
    std::vector<int> ys{target.lo.y, target.hi.y};
    for (const auto& m : inside) {
        xs.push_back(m.ll.x);
        xs.push_back(m.ur.x);
        ys.push_back(m.ll.y);
        ys.push_back(m.ur.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            bool hit = false;
            for (const auto& m : inside) {
                if (m.ll.x <= xs[i] && xs[i + 1] <= m.ur.x && m.ll.y <= ys[j] && ys[j + 1] <= m.ur.y) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
    }
    return true;
}

std::vector<Interval> members_inside(const Polyocollection& c, const Box& target) {
    std::vector<Interval> inside;
    for (const auto& m : c.members())
        if (target.contains(m.box())) inside.push_back(m);
    return inside;
}

}  // namespace

std::vector<Interval> inner_intervals(const Polyocollection& c) {
    std::vector<Interval> result;
    const auto& vs = c.vertices();
    for (Point a : vs) {
        for (Point b : vs) {
            if (!lt_strict(a, b)) continue;
            Box target{a, b};
            auto inside = members_inside(c, target);
            if (inside.empty()) continue;
            if (covered_by(target, inside)) result.emplace_back(a, b);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Interval> tiling_witness(const Polyocollection& c, const Interval& inner) {
    Box target = inner.box();
    auto inside = members_inside(c, target);
    if (!covered_by(target, inside))
        throw input_error(to_string(inner) + " is not an inner interval");

    std::vector<int> xs{target.lo.x, target.hi.x};
    std::vector<int> ys{target.lo.y, target.hi.y};
    for (const auto& m : inside) {
        xs.push_back(m.ll.x);
        xs.push_back(m.ur.x);
        ys.push_back(m.ll.y);
        ys.push_back(m.ur.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    auto xi = [&](int x) { return std::lower_bound(xs.begin(), xs.end(), x) - xs.begin(); };
    auto yi = [&](int y) { return std::lower_bound(ys.begin(), ys.end(), y) - ys.begin(); };

    const std::size_t nx = xs.size() - 1, ny = ys.size() - 1;
    std::vector<char> covered(nx * ny, 0);
    std::vector<Interval> witness;

    // The uncovered elementary rectangle with the smallest (x, y) forces the
    // member whose lower-left corner sits exactly there; in a polyocollection
    // that member is unique, so the walk never needs to backtrack.
    for (;;) {
        std::size_t ci = nx, cj = ny;
        for (std::size_t i = 0; i < nx && ci == nx; ++i)
            for (std::size_t j = 0; j < ny; ++j)
                if (!covered[i * ny + j]) {
                    ci = i;
                    cj = j;
                    break;
                }
        if (ci == nx) break;  // fully covered

        Point p{xs[ci], ys[cj]};
        const Interval* pick = nullptr;
        for (const auto& m : inside)
            if (m.ll == p) {
                pick = &m;
                break;
            }
        if (!pick)
            throw input_error("no member starts at forced corner " + to_string(p) +
                              " while tiling " + to_string(inner));
        for (std::size_t i = xi(pick->ll.x); i < (std::size_t)xi(pick->ur.x); ++i)
            for (std::size_t j = yi(pick->ll.y); j < (std::size_t)yi(pick->ur.y); ++j) {
                if (covered[i * ny + j])
                    throw input_error("tiling overlap at grid cell while covering " + to_string(inner));
                covered[i * ny + j] = 1;
            }
        witness.push_back(*pick);
    }
    std::sort(witness.begin(), witness.end());
    return witness;
}

std::vector<Polyocollection> connected_components(const Polyocollection& c) {
    const auto& ms = c.members();
    std::vector<std::size_t> parent(ms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    std::map<Point, std::size_t> owner;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        for (Point v : ms[k].vertices()) {
            auto [it, fresh] = owner.emplace(v, k);
            if (!fresh) parent[find(k)] = find(it->second);
        }
    }

    std::map<std::size_t, std::vector<Interval>> groups;
    for (std::size_t k = 0; k < ms.size(); ++k) groups[find(k)].push_back(ms[k]);

    std::vector<Polyocollection> components;
    for (auto& [root, intervals] : groups) components.push_back(Polyocollection::of(std::move(intervals)));
    return components;
}

}  // namespace polyo
