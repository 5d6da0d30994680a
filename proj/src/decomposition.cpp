#include "polyo/decomposition.hpp"

#include "polyo/ideal_ops.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace polyo {

namespace {

bool contains_edge_boundary(const Interval& iv, const std::set<Point>& x) {
    Point a = iv.ll, b = iv.ur, c = iv.ul(), d = iv.lr();
    const std::pair<Point, Point> boundaries[4] = {{a, c}, {a, d}, {b, d}, {b, c}};
    for (auto& [p, q] : boundaries)
        if (x.count(p) && x.count(q)) return true;
    return false;
}

}  // namespace

AdmissibleCheck is_admissible(const Polyocollection& c, const std::vector<Point>& x) {
    std::set<Point> xs(x.begin(), x.end());
    const auto& vs = c.vertices();
    for (Point p : x)
        if (!std::binary_search(vs.begin(), vs.end(), p))
            throw input_error("admissible-set candidate contains " + to_string(p) +
                              " outside V(C)");
    for (const auto& iv : inner_intervals(c)) {
        int met = 0;
        for (Point v : iv.vertices()) met += xs.count(v) ? 1 : 0;
        if (met == 0) continue;
        if (!contains_edge_boundary(iv, xs)) return {false, iv};
    }
    return {true, std::nullopt};
}

std::vector<std::vector<Point>> enumerate_admissible_sets(const Polyocollection& c,
                                                          int vertex_cap) {
    const auto& vs = c.vertices();
    const int n = (int)vs.size();
    if (n > vertex_cap)
        throw cap_exceeded("admissible-set enumeration refused: " + std::to_string(n) +
                           " vertices exceed the cap of " + std::to_string(vertex_cap));
    if (n == 0) return {{}};

    auto inner = inner_intervals(c);
    // Corner indices per inner interval, and the intervals touching each
    // vertex, for incremental pruning.
    std::vector<std::array<int, 4>> corners;
    auto index_of = [&](Point p) {
        return (int)(std::lower_bound(vs.begin(), vs.end(), p) - vs.begin());
    };
    for (const auto& iv : inner)
        corners.push_back({index_of(iv.ll), index_of(iv.ur), index_of(iv.ul()),
                           index_of(iv.lr())});
    // Sort constraint order by area so tight intervals prune first.
    std::vector<std::size_t> by_area(inner.size());
    for (std::size_t k = 0; k < inner.size(); ++k) by_area[k] = k;
    std::sort(by_area.begin(), by_area.end(), [&](std::size_t a, std::size_t b) {
        return inner[a].area() < inner[b].area();
    });

    std::vector<int> state(n, -1);  // -1 undecided, 0 out, 1 in
    std::vector<std::vector<Point>> found;

    // Edge boundaries as corner-index pairs: (ll,ul), (ll,lr), (ur,lr), (ur,ul).
    auto feasible = [&](std::size_t k) {
        const auto& cs = corners[k];
        int in = 0, undecided = 0;
        for (int ci : cs) {
            if (state[ci] == 1) ++in;
            if (state[ci] == -1) ++undecided;
        }
        if (in == 0) return true;  // may still end empty
        const std::pair<int, int> pairs[4] = {
            {cs[0], cs[2]}, {cs[0], cs[3]}, {cs[1], cs[3]}, {cs[1], cs[2]}};
        for (auto& [p, q] : pairs)
            if (state[p] != 0 && state[q] != 0 && (undecided > 0 || (state[p] == 1 && state[q] == 1)))
                return true;
        return false;
    };
    auto complete_ok = [&](std::size_t k) {
        const auto& cs = corners[k];
        int in = 0;
        for (int ci : cs)
            if (state[ci] == 1) ++in;
        if (in == 0) return true;
        const std::pair<int, int> pairs[4] = {
            {cs[0], cs[2]}, {cs[0], cs[3]}, {cs[1], cs[3]}, {cs[1], cs[2]}};
        for (auto& [p, q] : pairs)
            if (state[p] == 1 && state[q] == 1) return true;
        return false;
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (std::size_t k : by_area)
                if (!complete_ok(k)) return;
            std::vector<Point> out;
            for (int i = 0; i < n; ++i)
                if (state[i] == 1) out.push_back(vs[i]);
            found.push_back(std::move(out));
            return;
        }
        for (int val : {0, 1}) {
            state[v] = val;
            bool ok = true;
            for (std::size_t k : by_area)
                if (!feasible(k)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
        state[v] = -1;
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

Polyocollection derived_polyocollection(const Polyocollection& c, const std::vector<Point>& x) {
    auto check = is_admissible(c, x);
    if (!check.admissible)
        throw input_error("set is not admissible; witness interval " +
                          to_string(*check.violating));
    std::set<Point> xs(x.begin(), x.end());
    std::vector<Interval> avoiding;
    for (const auto& iv : inner_intervals(c)) {
        bool touched = false;
        for (Point v : iv.vertices()) touched = touched || xs.count(v);
        if (!touched) avoiding.push_back(iv);
    }
    // Minimal members by inclusion generate the derived collection.
    std::vector<Interval> minimal;
    for (const auto& iv : avoiding) {
        bool is_min = true;
        for (const auto& other : avoiding)
            if (!(other == iv) && iv.contains(other)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(iv);
    }
    auto derived = Polyocollection::of(minimal);
    if (inner_intervals(derived) != avoiding)
        throw invariant_violation("derived polyocollection has unexpected inner intervals");
    return derived;
}

Ideal j_ideal(const Polyocollection& c, const std::vector<Point>& x) {
    return j_ideal(c, x, Ring::vertex_ring(c.vertices()));
}

Ideal j_ideal(const Polyocollection& c, const std::vector<Point>& x,
              std::shared_ptr<const Ring> ring) {
    auto derived = derived_polyocollection(c, x);
    std::vector<QPoly> gens;
    for (Point p : x) {
        int idx = ring->index_of_vertex(p);
        if (idx < 0) throw input_error("ring lacks vertex variable " + to_string(p));
        gens.push_back(poly_variable(idx));
    }
    if (!derived.empty()) {
        std::set<Point> xs(x.begin(), x.end());
        for (Point v : derived.vertices())
            if (xs.count(v))
                throw invariant_violation("derived collection touches the admissible set");
        auto lat = lattice_ideal(derived, ring);
        for (const auto& g : lat.gens()) gens.push_back(g);
    }
    return Ideal(std::move(ring), std::move(gens));
}

namespace {

std::string basis_fingerprint(const Ideal& ideal) {
    std::string out;
    for (const auto& g : ideal.groebner()) out += to_string(g, ideal.ring()) + ";";
    return out;
}

}  // namespace

DecompositionReport radical_decomposition(const Polyocollection& c, int vertex_cap) {
    auto start = std::chrono::steady_clock::now();
    DecompositionReport report;

    auto base = ideal_of(c);
    auto sets = enumerate_admissible_sets(c, vertex_cap);
    report.admissible_count = (int)sets.size();

    // Build J_X per admissible set, dropping duplicates by reduced basis.
    std::vector<DecompositionComponent> all;
    std::set<std::string> seen;
    for (const auto& x : sets) {
        DecompositionComponent comp{j_ideal(c, x, base.ring_ptr()), "J_X", x, 0};
        if (comp.ideal.is_unit_ideal())
            throw invariant_violation("J_X turned out improper");
        if (!seen.insert(basis_fingerprint(comp.ideal)).second) continue;
        all.push_back(std::move(comp));
    }
    report.candidate_count = (int)all.size();
    // Keep the inclusion-minimal ideals.
    std::vector<char> minimal(all.size(), 1);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j || !minimal[i]) continue;
            if (contains(all[i].ideal, all[j].ideal)) minimal[i] = 0;  // strictly larger: drop
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        if (minimal[i]) report.components.push_back(all[i]);

    for (auto& comp : report.components) comp.height = height(comp.ideal);
    if (!base.is_zero_ideal()) report.base_height = height(base);

    // Intersect the minimal family and compare with I_C.
    std::optional<Ideal> meet;
    for (const auto& comp : report.components)
        meet = meet ? intersect(*meet, comp.ideal) : comp.ideal;
    if (meet) {
        if (!contains(*meet, base))
            throw invariant_violation("intersection of the J_X misses I_C");
        report.intersection_equals_ideal = ideal_equal(*meet, base);
    }
    report.unmixed = true;
    for (const auto& comp : report.components)
        report.unmixed = report.unmixed && comp.height == report.base_height;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

QPoly zigzag_binomial(const ZigZagWalk& walk, const Ring& ring) {
    std::vector<std::pair<int, int>> zs, us;
    for (Point p : walk.z) {
        int idx = ring.index_of_vertex(p);
        if (idx < 0) throw input_error("ring lacks vertex variable " + to_string(p));
        zs.emplace_back(idx, 1);
    }
    for (Point p : walk.u) {
        int idx = ring.index_of_vertex(p);
        if (idx < 0) throw input_error("ring lacks vertex variable " + to_string(p));
        us.emplace_back(idx, 1);
    }
    return pure_difference(Monomial(std::move(zs)), Monomial(std::move(us)), ring.order());
}

Ideal z_ideal(const CellComplex& cc) {
    return z_ideal(cc, Ring::vertex_ring(cc.vertices()));
}

Ideal z_ideal(const CellComplex& cc, std::shared_ptr<const Ring> ring) {
    std::vector<QPoly> gens;
    for (const auto& w : enumerate_zigzag_walks(cc)) gens.push_back(zigzag_binomial(w, *ring));
    return Ideal(std::move(ring), std::move(gens));
}

namespace {

std::vector<ZigZagWalk> walks_or_throw(const CellComplex& cc) {
    auto walks = enumerate_zigzag_walks(cc);
    if (walks.empty())
        throw input_error("prime closed path (no zig-zag walk): p1/p2 are undefined");
    return walks;
}

}  // namespace

Ideal closed_path_p1(const CellComplex& cc) {
    walks_or_throw(cc);
    auto poly = cc.as_polyocollection();
    auto base = ideal_of(poly);
    std::vector<QPoly> gens = base.gens();
    auto z = z_ideal(cc, base.ring_ptr());
    for (const auto& g : z.gens()) gens.push_back(g);
    return Ideal(base.ring_ptr(), std::move(gens));
}

Ideal closed_path_p2(const CellComplex& cc) {
    walks_or_throw(cc);
    auto ring = Ring::vertex_ring(cc.vertices());
    std::vector<QPoly> gens;
    std::set<Point> vars;
    for (Point p : necklace_of(cc)) vars.insert(p);
    for (Point p : m_set(cc)) vars.insert(p);
    for (Point p : vars) gens.push_back(poly_variable(ring->index_of_vertex(p)));
    for (const auto& iv : r_set(cc)) gens.push_back(inner_minor(iv, *ring));
    return Ideal(std::move(ring), std::move(gens));
}

MainTheoremReport verify_main_theorem(const CellComplex& cc, bool with_toric,
                                      JunctionChoice choice) {
    auto start = std::chrono::steady_clock::now();
    MainTheoremReport report;
    report.cells = (int)cc.size();
    auto walks = walks_or_throw(cc);
    report.walk_count = (int)walks.size();

    auto poly = cc.as_polyocollection();
    auto ip = ideal_of(poly);
    auto p1 = closed_path_p1(cc);
    auto p2 = closed_path_p2(cc);

    report.p1_is_lattice_ideal = ideal_equal(p1, lattice_ideal(poly, ip.ring_ptr()));

    // p2 is prime by structure: pairwise disjoint variable supports across
    // its variable generators and switchback minors.
    std::set<int> used;
    report.p2_structurally_prime = true;
    for (const auto& g : p2.gens()) {
        std::set<int> support;
        for (const auto& t : g.terms())
            for (auto& [v, e] : t.mono.exps()) support.insert(v);
        for (int v : support)
            if (!used.insert(v).second) report.p2_structurally_prime = false;
        if (!(g.size() == 1 || g.is_pure_difference_binomial()))
            report.p2_structurally_prime = false;
    }

    report.intersection_equals = ideal_equal(intersect(p1, p2), ip);
    report.height_p1 = height(p1);
    report.height_p2 = height(p2);
    report.height_ip = height(ip);
    report.heights_match = report.height_p1 == report.cells &&
                           report.height_p2 == report.cells && report.height_ip == report.cells;
    report.unmixed = report.intersection_equals && report.heights_match;
    report.necklace_partition =
        necklace_of(cc).size() + m_set(cc).size() + r_set(cc).size() == cc.size();
    report.exponent_rank_p1 = binomial_height_bound(p1);
    if (with_toric) report.p1_equals_toric = ideal_equal(toric_ideal_JP(cc, choice), p1);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace polyo
