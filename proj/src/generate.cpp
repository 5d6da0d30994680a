#include "polyo/generate.hpp"

#include "polyo/zigzag.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace polyo {

namespace {

// Four straight strips joined by four step junctions; the smallest family
// of cycles with zig-zag walks (2p + 2q + 4 cells).
std::vector<Point> pinwheel_cells(int p, int q) {
    std::vector<Point> cells;
    for (int y = 1; y <= q; ++y) cells.push_back({0, y});
    cells.push_back({1, 1});
    for (int x = 1; x <= p; ++x) cells.push_back({x, 0});
    cells.push_back({p, 1});
    for (int y = 1; y <= q; ++y) cells.push_back({p + 1, y});
    cells.push_back({p, q});
    for (int x = 1; x <= p; ++x) cells.push_back({x, q + 1});
    cells.push_back({1, q});
    return cells;
}

// Rectangle ring whose top side dips by one row, adding two switchback
// junctions (2(t1+t2+t3) + 8 cells).
std::vector<Point> wavy_cells(int t1, int t2, int t3) {
    const int p = t1 + t2 + t3 - 2;
    const int c1 = t3, c2 = t3 + t2 - 1;
    std::vector<Point> cells;
    for (int x = 1; x <= p; ++x) cells.push_back({x, 0});
    for (int y = 1; y <= 3; ++y) cells.push_back({0, y});
    for (int y = 1; y <= 3; ++y) cells.push_back({p + 1, y});
    cells.push_back({1, 1});
    cells.push_back({p, 1});
    cells.push_back({1, 3});
    cells.push_back({p, 3});
    for (int x = 1; x <= c1; ++x) cells.push_back({x, 4});
    for (int x = c1; x <= c2; ++x) cells.push_back({x, 3});
    for (int x = c2; x <= p; ++x) cells.push_back({x, 4});
    return cells;
}

std::vector<Point> transform_cells(const std::vector<Point>& cells, int symmetry, Point shift) {
    std::vector<Point> out;
    out.reserve(cells.size());
    for (Point c : cells) {
        Point p = c;
        // Cell transforms use the cell's lower-left corner; rotations and
        // reflections need the -1 offset to stay on cell corners.
        switch (symmetry % 4) {
            case 0: break;
            case 1: p = {-c.y - 1, c.x}; break;
            case 2: p = {-c.x - 1, -c.y - 1}; break;
            case 3: p = {c.y, -c.x - 1}; break;
        }
        if (symmetry >= 4) p = {-p.x - 1, p.y};
        out.push_back({p.x + shift.x, p.y + shift.y});
    }
    return out;
}

std::vector<Point> normalize_cells(std::vector<Point> cells) {
    Point lo = cells.front();
    for (Point c : cells) lo = meet(lo, c);
    for (Point& c : cells) c = {c.x - lo.x, c.y - lo.y};
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::optional<CellComplex> random_ring_walk(std::mt19937_64& rng, int max_cells) {
    const Point dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<Point> seq{{0, 0}};
        std::set<Point> used{{0, 0}};
        int dir = 0;
        seq.push_back({1, 0});
        used.insert({1, 0});
        bool closed = false;
        while ((int)seq.size() < max_cells) {
            Point cur = seq.back();
            // Prefer straight movement; rings need long strips to be
            // interesting.
            int weights[4] = {0, 0, 0, 0};
            weights[dir] = 6;
            weights[(dir + 1) % 4] = 1;
            weights[(dir + 3) % 4] = 1;
            int total = 8;
            int pick = (int)(rng() % total);
            int chosen = dir;
            for (int d = 0; d < 4; ++d) {
                if (weights[d] == 0) continue;
                if (pick < weights[d]) {
                    chosen = d;
                    break;
                }
                pick -= weights[d];
            }
            Point next{cur.x + dirs[chosen].x, cur.y + dirs[chosen].y};
            if (next == Point{0, 0} && seq.size() >= 6) {
                closed = true;
                break;
            }
            if (used.count(next)) break;
            seq.push_back(next);
            used.insert(next);
            dir = chosen;
        }
        if (!closed) continue;
        CellComplex cc{std::vector<Point>(seq.begin(), seq.end())};
        if (cc.closed_path().ok()) return cc;
    }
    return std::nullopt;
}

}  // namespace

std::vector<GeneratedPath> generate_closed_paths(std::uint64_t seed, int max_cells, int count) {
    if (max_cells < 6) throw input_error("closed paths need at least six cells");
    std::mt19937_64 rng(seed);
    std::vector<GeneratedPath> out;

    // Parametric shapes that fit the cap, smallest first.
    std::vector<std::vector<Point>> shapes;
    for (int total = 16; total <= max_cells; total += 2)
        for (int p = 3; p + 3 <= total / 2 - 2; ++p) {
            int q = total / 2 - 2 - p;
            if (q >= 3) shapes.push_back(pinwheel_cells(p, q));
        }
    for (int total = 26; total <= max_cells; total += 2)
        for (int t1 = 3; t1 <= total; ++t1)
            for (int t2 = 3; t2 <= total; ++t2) {
                int t3 = (total - 8) / 2 - t1 - t2;
                if (t3 >= 3) shapes.push_back(wavy_cells(t1, t2, t3));
            }

    std::size_t shape_cursor = 0;
    for (int i = 0; i < count; ++i) {
        std::optional<CellComplex> cc;
        if (i % 3 != 2 && shape_cursor < shapes.size()) {
            int symmetry = (int)(rng() % 8);
            Point shift{(int)(rng() % 5), (int)(rng() % 5)};
            cc = CellComplex(transform_cells(shapes[shape_cursor++], symmetry, shift));
            if (shape_cursor == shapes.size()) shape_cursor = 0;
        } else {
            cc = random_ring_walk(rng, max_cells);
            if (!cc && shape_cursor < shapes.size()) {
                cc = CellComplex(shapes[shape_cursor++]);
                if (shape_cursor == shapes.size()) shape_cursor = 0;
            }
        }
        if (!cc) continue;
        if (!cc->closed_path().ok())
            throw invariant_violation("generator produced a non closed path");
        GeneratedPath gp;
        gp.cells = *cc;
        gp.prime = enumerate_zigzag_walks(*cc).empty();
        gp.index = (std::uint64_t)out.size();
        out.push_back(std::move(gp));
    }
    return out;
}

std::vector<Polyocollection> generate_polyocollections(std::uint64_t seed, int count,
                                                       int max_vertices) {
    std::mt19937_64 rng(seed);
    std::vector<Polyocollection> out;
    while ((int)out.size() < count) {
        if (rng() % 2 == 0) {
            // Connected random cell growth.
            int n = 1 + (int)(rng() % 6);
            std::vector<Point> cells{{0, 0}};
            std::set<Point> used{{0, 0}};
            while ((int)cells.size() < n) {
                Point base = cells[rng() % cells.size()];
                const Point dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                Point next = {base.x + dirs[rng() % 4].x, base.y + dirs[rng() % 4].y};
                if (used.insert(next).second) cells.push_back(next);
            }
            auto poly = CellComplex(cells).as_polyocollection();
            if ((int)poly.vertices().size() <= max_vertices) out.push_back(std::move(poly));
        } else {
            // Rejection-sampled interval families on a small grid.
            int k = 1 + (int)(rng() % 4);
            std::vector<Interval> ivs;
            bool bad = false;
            for (int i = 0; i < k; ++i) {
                int x = (int)(rng() % 5), y = (int)(rng() % 5);
                int w = 1 + (int)(rng() % 3), h = 1 + (int)(rng() % 3);
                Interval iv({x, y}, {x + w, y + h});
                if (std::find(ivs.begin(), ivs.end(), iv) != ivs.end()) {
                    bad = true;
                    break;
                }
                ivs.push_back(iv);
            }
            if (bad) continue;
            auto result = Polyocollection::validate(ivs);
            if (!result.valid()) continue;
            if ((int)result.collection->vertices().size() <= max_vertices)
                out.push_back(*std::move(result.collection));
        }
    }
    return out;
}

std::vector<CellComplex> search_nonprime_closed_paths(int max_cells) {
    // Canonical traversal: the lexicographically smallest cell of a cycle
    // has both neighbours to its east and north, so every cycle can start
    // (0,0) -> (1,0).
    std::set<std::vector<Point>> seen;
    std::vector<CellComplex> found;
    std::vector<Point> seq{{0, 0}, {1, 0}};
    std::set<Point> used{{0, 0}, {1, 0}};

    auto shares_vertex = [](Point a, Point b) {
        return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
    };

    auto rec = [&](auto&& self) -> void {
        Point cur = seq.back();
        const Point dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (Point d : dirs) {
            Point next{cur.x + d.x, cur.y + d.y};
            if (next == Point{0, 0} && seq.size() >= 6) {
                CellComplex cc{std::vector<Point>(seq.begin(), seq.end())};
                if (cc.closed_path().ok() && !enumerate_zigzag_walks(cc).empty()) {
                    // Canonical form over the 8 symmetries.
                    std::vector<Point> best;
                    for (int s = 0; s < 8; ++s) {
                        auto v = normalize_cells(transform_cells(seq, s, {0, 0}));
                        if (best.empty() || v < best) best = v;
                    }
                    if (seen.insert(best).second) found.push_back(cc);
                }
                continue;
            }
            if ((int)seq.size() >= max_cells) continue;
            if (used.count(next)) continue;
            if (next.x < 0 || (next.x == 0 && next.y < 0)) continue;  // canonical halfplane
            bool ok = true;
            // Vertex-disjointness against everything except the previous two
            // cells and the first two (cells near the eventual closure may
            // legally touch them; full validation settles those).
            for (std::size_t i = 2; i + 2 < seq.size() && ok; ++i)
                if (shares_vertex(seq[i], next)) ok = false;
            if (!ok) continue;
            seq.push_back(next);
            used.insert(next);
            self(self);
            seq.pop_back();
            used.erase(next);
        }
    };
    rec(rec);
    return found;
}

}  // namespace polyo
