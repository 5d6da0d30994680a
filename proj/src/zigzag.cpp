#include "polyo/zigzag.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyo {

namespace {

std::vector<Point> shared_corners(Point cell_a, Point cell_b) {
    auto va = cell_interval(cell_a).vertices();
    auto vb = cell_interval(cell_b).vertices();
    std::vector<Point> out;
    for (Point p : va)
        for (Point q : vb)
            if (p == q) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ClosedPathStructure analyze_closed_path(const CellComplex& cc) {
    auto cp = cc.closed_path();
    if (!cp.ok())
        throw input_error("not a closed path (" + cp.failure->reason + ")");
    ClosedPathStructure s;
    s.sequence = *cp.sequence;
    const auto& seq = s.sequence;
    const int n = (int)seq.size();

    auto turning = [&](int i) {
        Point prev = seq[(i + n - 1) % n], next = seq[(i + 1) % n];
        return prev.x != next.x && prev.y != next.y;
    };

    int anchor = -1;
    for (int i = 0; i < n && anchor < 0; ++i)
        if (!turning(i)) anchor = i;
    if (anchor < 0) {
        s.walkable = false;  // every cell turns; one long run
        return s;
    }

    // Turning runs in cyclic order, starting after a straight cell.
    std::vector<std::pair<int, int>> runs;  // [start, end] inclusive, cyclic indices
    for (int off = 0; off < n;) {
        int i = (anchor + 1 + off) % n;
        if (!turning(i)) {
            ++off;
            continue;
        }
        int len = 0;
        while (len < n && turning((i + len) % n)) ++len;
        runs.push_back({i, (i + len - 1) % n});
        off += len;
    }

    s.walkable = true;
    for (auto [a, b] : runs) {
        int len = (b - a + n) % n + 1;
        if (len != 2 && len != 3) {
            s.walkable = false;
            return s;
        }
        Junction j;
        j.run_cells.clear();
        for (int k = 0; k < len; ++k) j.run_cells.push_back(seq[(a + k) % n]);
        if (len == 3) {
            j.type = JunctionType::Step;
            auto c01 = shared_corners(j.run_cells[0], j.run_cells[1]);
            auto c12 = shared_corners(j.run_cells[1], j.run_cells[2]);
            std::vector<Point> common;
            for (Point p : c01)
                for (Point q : c12)
                    if (p == q) common.push_back(p);
            if (common.size() != 1)
                throw invariant_violation("step junction without a unique shared corner");
            j.shared_corner = common.front();
            j.outer_corner = cell_interval(j.run_cells[1]).opposite_corner(j.shared_corner);
        } else {
            j.type = JunctionType::Switchback;
            auto cs = shared_corners(j.run_cells[0], j.run_cells[1]);
            if (cs.size() != 2)
                throw invariant_violation("switchback junction without two shared corners");
            j.choices = {cs[0], cs[1]};
            Point lo = meet(j.run_cells[0], j.run_cells[1]);
            Point hi = join(j.run_cells[0], j.run_cells[1]);
            j.switch_interval = Interval(lo, {hi.x + 1, hi.y + 1});
        }
        s.junctions.push_back(std::move(j));
    }

    // Strip k runs from the last cell of junction k's run to the first cell
    // of junction k+1's run; those cells are collinear.
    auto index_of = [&](Point c) {
        for (int i = 0; i < n; ++i)
            if (seq[i] == c) return i;
        return -1;
    };
    const int l = (int)s.junctions.size();
    for (int k = 0; k < l; ++k) {
        int from = index_of(s.junctions[k].run_cells.back());
        int to = index_of(s.junctions[(k + 1) % l].run_cells.front());
        Point lo = seq[from], hi = seq[from];
        for (int i = from;; i = (i + 1) % n) {
            lo = meet(lo, seq[i]);
            hi = join(hi, seq[i]);
            if (i == to) break;
        }
        if (lo.x != hi.x && lo.y != hi.y)
            throw invariant_violation("strip cells are not collinear");
        s.strips.push_back(Interval(lo, {hi.x + 1, hi.y + 1}));
    }
    return s;
}

namespace {

struct WalkCandidate {
    std::vector<Interval> intervals;
    std::vector<Point> v;
};

std::optional<ZigZagWalk> assemble(const WalkCandidate& cand) {
    const int l = (int)cand.intervals.size();
    ZigZagWalk w;
    w.intervals = cand.intervals;
    w.v = cand.v;
    w.z.resize(l);
    w.u.resize(l);
    for (int i = 0; i < l; ++i) {
        const Interval& iv = cand.intervals[i];
        Point vin = cand.v[i], vout = cand.v[(i + 1) % l];
        if (!iv.is_corner(vin) || !iv.is_corner(vout)) return std::nullopt;
        if (iv.opposite_corner(vin) == vout) return std::nullopt;  // need adjacent corners
        w.z[i] = iv.opposite_corner(vin);
        w.u[i] = iv.opposite_corner(vout);
    }
    return w;
}

bool intersect_in_single_point(const Interval& a, const Interval& b, Point p) {
    auto o = intersect(a.box(), b.box());
    return o && o->lo == p && o->hi == p;
}

bool on_common_edge_interval(const CellComplex& cc, Point a, Point b) {
    if (a.y == b.y) {
        int i = cc.edge_interval_index(true, a);
        return i >= 0 && i == cc.edge_interval_index(true, b);
    }
    if (a.x == b.x) {
        int i = cc.edge_interval_index(false, a);
        return i >= 0 && i == cc.edge_interval_index(false, b);
    }
    return false;
}

bool z_pair_blocked(const std::vector<Interval>& inner, Point zi, Point zj) {
    for (const auto& J : inner)
        if (J.contains(zi) && J.contains(zj)) return true;
    return false;
}

// Full check of the walk conditions for one oriented candidate.
bool valid_walk(const CellComplex& cc, const std::vector<Interval>& inner, const ZigZagWalk& w) {
    const int l = w.length();
    if (l < 3) return false;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (w.intervals[i] == w.intervals[j]) return false;
    for (const auto& iv : w.intervals)
        if (std::find(inner.begin(), inner.end(), iv) == inner.end()) return false;
    for (int i = 0; i < l; ++i) {
        if (!intersect_in_single_point(w.intervals[i], w.intervals[(i + 1) % l], w.v[(i + 1) % l]))
            return false;
        if (!on_common_edge_interval(cc, w.v[i], w.v[(i + 1) % l])) return false;
    }
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (z_pair_blocked(inner, w.z[i], w.z[j])) return false;
    return true;
}

ZigZagWalk rotate_walk(const ZigZagWalk& w, int r) {
    const int l = w.length();
    ZigZagWalk out;
    out.intervals.resize(l);
    out.v.resize(l);
    out.z.resize(l);
    out.u.resize(l);
    for (int i = 0; i < l; ++i) {
        out.intervals[i] = w.intervals[(i + r) % l];
        out.v[i] = w.v[(i + r) % l];
        out.z[i] = w.z[(i + r) % l];
        out.u[i] = w.u[(i + r) % l];
    }
    return out;
}

ZigZagWalk reverse_walk(const ZigZagWalk& w) {
    const int l = w.length();
    WalkCandidate cand;
    cand.intervals.resize(l);
    cand.v.resize(l);
    // Traversed backwards, interval k becomes I_{l-1-k}; the entry vertex of
    // the reversed walk at position k is the old v_{l-k}.
    for (int i = 0; i < l; ++i) cand.intervals[i] = w.intervals[l - 1 - i];
    for (int i = 0; i < l; ++i) cand.v[i] = w.v[(l - i) % l];
    auto out = assemble(cand);
    if (!out) throw invariant_violation("walk reversal failed to assemble");
    return *out;
}

std::vector<std::pair<Point, Interval>> canonical_key(const ZigZagWalk& w) {
    std::vector<std::pair<Point, Interval>> key;
    for (int i = 0; i < w.length(); ++i) key.emplace_back(w.v[i], w.intervals[i]);
    return key;
}

// Smallest rotation of the orientation; both orientations are tried by the
// callers that canonicalize.
ZigZagWalk canonical_rotation(const ZigZagWalk& w) {
    ZigZagWalk best = w;
    auto best_key = canonical_key(w);
    for (int r = 1; r < w.length(); ++r) {
        auto cand = rotate_walk(w, r);
        auto key = canonical_key(cand);
        if (key < best_key) {
            best_key = std::move(key);
            best = std::move(cand);
        }
    }
    return best;
}

// Canonicalize over rotations and the two traversal directions, keeping only
// directions that satisfy the walk conditions.
std::optional<ZigZagWalk> canonicalize(const CellComplex& cc, const std::vector<Interval>& inner,
                                       const ZigZagWalk& w) {
    std::optional<ZigZagWalk> best;
    for (const ZigZagWalk& cand : {w, reverse_walk(w)}) {
        if (!valid_walk(cc, inner, cand)) continue;
        auto rot = canonical_rotation(cand);
        if (!best || canonical_key(rot) < canonical_key(*best)) best = rot;
    }
    return best;
}

std::optional<Interval> truncate_strip(const Interval& strip, Point vin, Point vout) {
    if (strip.height() == 1) {
        int lo = std::min(vin.x, vout.x), hi = std::max(vin.x, vout.x);
        if (lo >= hi) return std::nullopt;
        return Interval({lo, strip.ll.y}, {hi, strip.ur.y});
    }
    if (strip.width() == 1) {
        int lo = std::min(vin.y, vout.y), hi = std::max(vin.y, vout.y);
        if (lo >= hi) return std::nullopt;
        return Interval({strip.ll.x, lo}, {strip.ur.x, hi});
    }
    return std::nullopt;
}

std::vector<ZigZagWalk> closed_path_walks(const CellComplex& cc) {
    auto s = analyze_closed_path(cc);
    std::vector<ZigZagWalk> out;
    if (!s.walkable || s.junctions.empty()) return out;

    const int l = (int)s.junctions.size();
    auto inner = cc.inner_intervals();
    std::set<std::vector<std::pair<Point, Interval>>> seen;

    std::vector<int> choice(l, 0);
    for (;;) {
        WalkCandidate cand;
        cand.v.resize(l);
        bool feasible = true;
        for (int k = 0; k < l; ++k) {
            const Junction& j = s.junctions[k];
            cand.v[k] = j.type == JunctionType::Step ? j.shared_corner : j.choices[choice[k]];
        }
        for (int k = 0; k < l && feasible; ++k) {
            auto iv = truncate_strip(s.strips[k], cand.v[k], cand.v[(k + 1) % l]);
            if (!iv)
                feasible = false;
            else
                cand.intervals.push_back(*iv);
        }
        if (feasible) {
            if (auto w = assemble(cand)) {
                if (auto canon = canonicalize(cc, inner, *w)) {
                    auto key = canonical_key(*canon);
                    if (seen.insert(key).second) out.push_back(*canon);
                }
            }
        }
        int k = 0;
        while (k < l) {
            if (s.junctions[k].type == JunctionType::Switchback && choice[k] == 0) {
                choice[k] = 1;
                break;
            }
            choice[k] = 0;
            ++k;
        }
        if (k == l) break;
    }
    std::sort(out.begin(), out.end(),
              [](const ZigZagWalk& a, const ZigZagWalk& b) { return canonical_key(a) < canonical_key(b); });
    return out;
}

}  // namespace

std::vector<ZigZagWalk> zigzag_walks_bruteforce(const CellComplex& cc, EnumerationCaps caps) {
    if ((int)cc.vertices().size() > caps.max_vertices)
        throw cap_exceeded("zig-zag enumeration refused: " + std::to_string(cc.vertices().size()) +
                           " vertices exceed the cap of " + std::to_string(caps.max_vertices));
    auto inner = cc.inner_intervals();
    std::set<std::vector<std::pair<Point, Interval>>> seen;
    std::vector<ZigZagWalk> out;

    struct Frame {
        int interval_index;
        Point entry;
    };
    std::vector<int> used;
    std::vector<Interval> ivs;
    std::vector<Point> vs;
    std::vector<Point> zs;

    auto emit = [&]() {
        WalkCandidate cand{ivs, vs};
        if (auto w = assemble(cand)) {
            if (auto canon = canonicalize(cc, inner, *w)) {
                auto key = canonical_key(*canon);
                if (seen.insert(key).second) {
                    out.push_back(*canon);
                    if ((int)out.size() > caps.max_walks)
                        throw cap_exceeded("zig-zag enumeration refused: more than " +
                                           std::to_string(caps.max_walks) + " walks");
                }
            }
        }
    };

    auto dfs = [&](auto&& self, int cur, Point vcur) -> void {
        const Interval& icur = inner[cur];
        Point zcur = icur.opposite_corner(vcur);
        for (Point zprev : zs)
            if (z_pair_blocked(inner, zprev, zcur)) return;
        zs.push_back(zcur);
        for (Point vnext : icur.adjacent_corners(vcur)) {
            if (!on_common_edge_interval(cc, vcur, vnext)) continue;
            // close the cycle
            if (vnext == vs.front() && ivs.size() >= 3 &&
                intersect_in_single_point(icur, ivs.front(), vnext)) {
                emit();
            }
            if (vnext < vs.front()) continue;  // canonical start is the smallest vertex
            for (int nxt = 0; nxt < (int)inner.size(); ++nxt) {
                if (std::find(used.begin(), used.end(), nxt) != used.end()) continue;
                if (!inner[nxt].is_corner(vnext)) continue;
                if (!intersect_in_single_point(icur, inner[nxt], vnext)) continue;
                used.push_back(nxt);
                ivs.push_back(inner[nxt]);
                vs.push_back(vnext);
                self(self, nxt, vnext);
                used.pop_back();
                ivs.pop_back();
                vs.pop_back();
            }
        }
        zs.pop_back();
    };

    for (int start = 0; start < (int)inner.size(); ++start) {
        for (Point v0 : inner[start].vertices()) {
            used = {start};
            ivs = {inner[start]};
            vs = {v0};
            zs.clear();
            dfs(dfs, start, v0);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ZigZagWalk& a, const ZigZagWalk& b) { return canonical_key(a) < canonical_key(b); });
    return out;
}

std::vector<ZigZagWalk> enumerate_zigzag_walks(const CellComplex& cc, EnumerationCaps caps) {
    if (cc.empty()) return {};
    if (cc.closed_path().ok()) return closed_path_walks(cc);
    return zigzag_walks_bruteforce(cc, caps);
}

std::vector<Point> necklace(const ZigZagWalk& walk) {
    std::set<Point> pts;
    const int l = walk.length();
    for (int i = 0; i < l; ++i) {
        Point a = walk.v[i], b = walk.v[(i + 1) % l];
        Point lo = meet(a, b), hi = join(a, b);
        if (lo.x == hi.x)
            for (int y = lo.y; y <= hi.y; ++y) pts.insert({lo.x, y});
        else if (lo.y == hi.y)
            for (int x = lo.x; x <= hi.x; ++x) pts.insert({x, lo.y});
        else
            throw invariant_violation("walk vertices not collinear");
    }
    return {pts.begin(), pts.end()};
}

namespace {

std::vector<ZigZagWalk> require_walks(const CellComplex& cc) {
    auto walks = enumerate_zigzag_walks(cc);
    if (walks.empty())
        throw input_error("no zig-zag walk: the necklace data is undefined for prime closed paths");
    return walks;
}

}  // namespace

std::vector<Point> necklace_of(const CellComplex& cc) {
    auto walks = require_walks(cc);
    auto n = necklace(walks.front());
    for (const auto& w : walks)
        if (necklace(w) != n) throw invariant_violation("walks with different necklaces");
    return n;
}

std::vector<Point> m_set(const CellComplex& cc) {
    require_walks(cc);
    auto s = analyze_closed_path(cc);
    std::vector<Point> out;
    for (const auto& j : s.junctions)
        if (j.type == JunctionType::Step) out.push_back(j.outer_corner);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interval> r_set(const CellComplex& cc) {
    require_walks(cc);
    auto s = analyze_closed_path(cc);
    std::vector<Interval> out;
    for (const auto& j : s.junctions)
        if (j.type == JunctionType::Switchback) out.push_back(j.switch_interval);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polyo
