#include "polyo/cells.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace polyo {

Interval Block::extent() const {
    Point lo = cells.front();
    Point hi = cells.back();
    return Interval(lo, {hi.x + 1, hi.y + 1});
}

CellComplex::CellComplex(std::vector<Point> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i] == cells_[i - 1]) throw input_error("duplicate cell " + to_string(cells_[i]));
}

bool CellComplex::contains_cell(Point c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Polyocollection CellComplex::as_polyocollection() const {
    std::vector<Interval> members;
    members.reserve(cells_.size());
    for (Point c : cells_) members.push_back(cell_interval(c));
    return Polyocollection::of(std::move(members));
}

std::vector<Point> CellComplex::vertices() const {
    std::set<Point> vs;
    for (Point c : cells_)
        for (Point v : cell_interval(c).vertices()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::vector<Block> CellComplex::maximal_blocks(bool horizontal, int min_rank) const {
    // Group by the fixed coordinate, scan runs along the other one.
    std::map<int, std::vector<int>> lines;
    for (Point c : cells_) {
        if (horizontal)
            lines[c.y].push_back(c.x);
        else
            lines[c.x].push_back(c.y);
    }
    std::vector<Block> blocks;
    for (auto& [fixed, coords] : lines) {
        std::sort(coords.begin(), coords.end());
        std::size_t i = 0;
        while (i < coords.size()) {
            std::size_t j = i;
            while (j + 1 < coords.size() && coords[j + 1] == coords[j] + 1) ++j;
            Block b;
            b.horizontal = horizontal;
            for (std::size_t k = i; k <= j; ++k)
                b.cells.push_back(horizontal ? Point{coords[k], fixed} : Point{fixed, coords[k]});
            if (b.rank() >= min_rank) blocks.push_back(std::move(b));
            i = j + 1;
        }
    }
    return blocks;
}

void CellComplex::build_edge_intervals() const {
    if (edges_built_) return;
    // Horizontal unit segments: keyed by line y, left endpoint x.
    std::map<int, std::set<int>> hseg, vseg;
    for (Point c : cells_) {
        hseg[c.y].insert(c.x);
        hseg[c.y + 1].insert(c.x);
        vseg[c.x].insert(c.y);
        vseg[c.x + 1].insert(c.y);
    }
    auto merge = [](const std::map<int, std::set<int>>& segs, bool horizontal) {
        std::vector<Box> out;
        for (const auto& [line, starts] : segs) {
            auto it = starts.begin();
            while (it != starts.end()) {
                int lo = *it, hi = *it + 1;
                auto next = std::next(it);
                while (next != starts.end() && *next == hi) {
                    hi = *next + 1;
                    ++next;
                }
                if (horizontal)
                    out.push_back(Box{{lo, line}, {hi, line}});
                else
                    out.push_back(Box{{line, lo}, {line, hi}});
                it = next;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    h_edge_intervals_ = merge(hseg, true);
    v_edge_intervals_ = merge(vseg, false);
    edges_built_ = true;
}

std::vector<Box> CellComplex::edge_intervals(bool horizontal) const {
    build_edge_intervals();
    return horizontal ? h_edge_intervals_ : v_edge_intervals_;
}

int CellComplex::edge_interval_index(bool horizontal, Point p) const {
    build_edge_intervals();
    const auto& list = horizontal ? h_edge_intervals_ : v_edge_intervals_;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].contains(p)) return (int)i;
    return -1;
}

HoleReport CellComplex::holes() const {
    HoleReport report;
    if (cells_.empty()) {
        report.simple = true;
        return report;
    }
    Point lo = cells_.front(), hi = cells_.front();
    for (Point c : cells_) {
        lo = meet(lo, c);
        hi = join(hi, c);
    }
    // One ring of margin: any unbounded complement component reaches it.
    lo = {lo.x - 1, lo.y - 1};
    hi = {hi.x + 1, hi.y + 1};
    const int w = hi.x - lo.x + 1, h = hi.y - lo.y + 1;
    auto idx = [&](int x, int y) { return (x - lo.x) * h + (y - lo.y); };
    std::vector<int> label(w * h, -1);  // -2 = in complex, else component id
    for (Point c : cells_) label[idx(c.x, c.y)] = -2;

    int next_label = 0;
    std::vector<std::vector<Point>> components;
    for (int x = lo.x; x <= hi.x; ++x)
        for (int y = lo.y; y <= hi.y; ++y) {
            if (label[idx(x, y)] != -1) continue;
            std::vector<Point> comp;
            std::queue<Point> q;
            label[idx(x, y)] = next_label;
            q.push({x, y});
            while (!q.empty()) {
                Point p = q.front();
                q.pop();
                comp.push_back(p);
                const Point nbrs[4] = {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
                for (Point n : nbrs) {
                    if (n.x < lo.x || n.x > hi.x || n.y < lo.y || n.y > hi.y) continue;
                    if (label[idx(n.x, n.y)] != -1) continue;
                    label[idx(n.x, n.y)] = next_label;
                    q.push(n);
                }
            }
            ++next_label;
            components.push_back(std::move(comp));
        }
    // The component containing the margin corner is the exterior.
    int exterior = label[idx(lo.x, lo.y)];
    for (int c = 0; c < next_label; ++c) {
        if (c == exterior) continue;
        auto& comp = components[c];
        std::sort(comp.begin(), comp.end());
        report.holes.push_back(comp);
    }
    report.simple = report.holes.empty();
    return report;
}

namespace {

std::vector<Point> cell_neighbours(const CellComplex& cc, Point c) {
    std::vector<Point> out;
    const Point nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (Point n : nbrs)
        if (cc.contains_cell(n)) out.push_back(n);
    return out;
}

bool cells_share_vertex(Point a, Point b) {
    return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
}

}  // namespace

ClosedPathResult CellComplex::closed_path() const {
    ClosedPathResult result;
    const std::size_t n = cells_.size();
    if (n == 0) {
        result.failure = ClosedPathFailure{"empty", {}};
        return result;
    }
    if (n <= 5) {
        result.failure = ClosedPathFailure{"size", cells_};
        return result;
    }
    // Cells at cyclic distance >= 3 may not even share a vertex, and the grid
    // adjacency graph is triangle-free, so every adjacency must be between
    // consecutive cells: each cell needs exactly two edge-neighbours.
    for (Point c : cells_) {
        auto nb = cell_neighbours(*this, c);
        if (nb.size() != 2) {
            result.failure = ClosedPathFailure{"degree", {c}};
            return result;
        }
    }
    // Walk the unique cycle from the smallest cell.
    std::vector<Point> seq;
    seq.reserve(n);
    Point start = cells_.front();
    auto first_two = cell_neighbours(*this, start);
    Point prev = start, cur = std::min(first_two[0], first_two[1]);
    seq.push_back(start);
    while (cur != start) {
        seq.push_back(cur);
        auto nb = cell_neighbours(*this, cur);
        Point next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (seq.size() > n) break;
    }
    if (seq.size() != n) {
        result.failure = ClosedPathFailure{"cycle", {start}};
        return result;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t d = std::min(j - i, n - (j - i));
            if (d <= 2) continue;
            if (cells_share_vertex(seq[i], seq[j])) {
                auto vi = cell_interval(seq[i]).box();
                auto vj = cell_interval(seq[j]).box();
                if (intersect(vi, vj)) {
                    result.failure = ClosedPathFailure{"vertex-disjointness", {seq[i], seq[j]}};
                    return result;
                }
            }
        }
    result.sequence = std::move(seq);
    return result;
}

std::vector<LConfiguration> CellComplex::find_L_configurations() const {
    std::vector<LConfiguration> found;
    // Depth-5 simple paths; kept canonical by requiring C1 < C5.
    for (Point c1 : cells_) {
        std::array<Point, 5> path;
        path[0] = c1;
        auto dfs = [&](auto&& self, int depth) -> void {
            if (depth == 5) {
                if (path[0] > path[4]) return;
                Point d1{path[1].x - path[0].x, path[1].y - path[0].y};
                Point d2{path[2].x - path[1].x, path[2].y - path[1].y};
                Point d3{path[3].x - path[2].x, path[3].y - path[2].y};
                Point d4{path[4].x - path[3].x, path[4].y - path[3].y};
                bool straight1 = d1 == d2, straight2 = d3 == d4;
                bool orthogonal = (d2.x * d3.x + d2.y * d3.y) == 0;
                if (straight1 && straight2 && orthogonal) found.push_back({path});
                return;
            }
            for (Point n : cell_neighbours(*this, path[depth - 1])) {
                bool visited = false;
                for (int k = 0; k < depth; ++k)
                    if (path[k] == n) visited = true;
                if (visited) continue;
                path[depth] = n;
                self(self, depth + 1);
            }
        };
        dfs(dfs, 1);
    }
    return found;
}

bool CellComplex::has_L_configuration() const { return !find_L_configurations().empty(); }

namespace {

struct LadderEdge {
    std::size_t to;
    Box junction;  // the two shared vertices, as a degenerate box
};

// Blocks of equal orientation sharing exactly two vertices form ladder edges.
std::vector<std::vector<LadderEdge>> ladder_graph(const std::vector<Block>& blocks) {
    std::vector<std::vector<LadderEdge>> adj(blocks.size());
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            auto ia = blocks[a].extent().box();
            auto ib = blocks[b].extent().box();
            auto shared = intersect(ia, ib);
            if (!shared || shared->lattice_points() != 2) continue;
            adj[a].push_back({b, *shared});
            adj[b].push_back({a, *shared});
        }
    return adj;
}

bool same_edge_interval(const CellComplex& cc, const Box& s1, const Box& s2) {
    bool horizontal = s1.lo.y == s1.hi.y;
    if (horizontal != (s2.lo.y == s2.hi.y)) return false;
    int i1 = cc.edge_interval_index(horizontal, s1.lo);
    int i2 = cc.edge_interval_index(horizontal, s2.lo);
    return i1 >= 0 && i1 == i2 && i1 == cc.edge_interval_index(horizontal, s1.hi) &&
           i2 == cc.edge_interval_index(horizontal, s2.hi);
}

}  // namespace

std::vector<Ladder> CellComplex::find_ladders(int min_steps) const {
    std::vector<Ladder> out;
    for (bool horizontal : {true, false}) {
        auto blocks = maximal_blocks(horizontal, 2);
        auto adj = ladder_graph(blocks);
        // Enumerate simple paths; junction segments of consecutive steps must
        // lie on distinct maximal edge intervals.
        std::vector<std::size_t> path;
        std::vector<Box> junctions;
        auto dfs = [&](auto&& self, std::size_t cur) -> void {
            if ((int)path.size() >= min_steps && path.front() < path.back())
                out.push_back(Ladder{[&] {
                    std::vector<Block> bs;
                    for (auto i : path) bs.push_back(blocks[i]);
                    return bs;
                }()});
            for (const auto& e : adj[cur]) {
                if (std::find(path.begin(), path.end(), e.to) != path.end()) continue;
                if (!junctions.empty() && same_edge_interval(*this, junctions.back(), e.junction)) continue;
                path.push_back(e.to);
                junctions.push_back(e.junction);
                self(self, e.to);
                path.pop_back();
                junctions.pop_back();
            }
        };
        for (std::size_t s = 0; s < blocks.size(); ++s) {
            path = {s};
            junctions.clear();
            dfs(dfs, s);
        }
    }
    return out;
}

bool CellComplex::has_ladder(int min_steps) const {
    for (bool horizontal : {true, false}) {
        auto blocks = maximal_blocks(horizontal, 2);
        auto adj = ladder_graph(blocks);
        std::vector<std::size_t> path;
        std::vector<Box> junctions;
        bool found = false;
        auto dfs = [&](auto&& self, std::size_t cur) -> void {
            if (found) return;
            if ((int)path.size() >= min_steps) {
                found = true;
                return;
            }
            for (const auto& e : adj[cur]) {
                if (std::find(path.begin(), path.end(), e.to) != path.end()) continue;
                if (!junctions.empty() && same_edge_interval(*this, junctions.back(), e.junction)) continue;
                path.push_back(e.to);
                junctions.push_back(e.junction);
                self(self, e.to);
                path.pop_back();
                junctions.pop_back();
                if (found) return;
            }
        };
        for (std::size_t s = 0; s < blocks.size() && !found; ++s) {
            path = {s};
            junctions.clear();
            dfs(dfs, s);
        }
        if (found) return true;
    }
    return false;
}

std::vector<Interval> CellComplex::inner_intervals() const {
    std::vector<Interval> out;
    if (cells_.empty()) return out;
    auto vs = vertices();
    for (Point a : vs)
        for (Point b : vs) {
            if (!lt_strict(a, b)) continue;
            bool all_in = true;
            for (int x = a.x; x < b.x && all_in; ++x)
                for (int y = a.y; y < b.y; ++y)
                    if (!contains_cell({x, y})) {
                        all_in = false;
                        break;
                    }
            if (all_in) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polyo
