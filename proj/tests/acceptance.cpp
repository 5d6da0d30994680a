// Acceptance suite: one line per criterion, exact checks throughout.
// Returns nonzero if any criterion fails.

#include "polyo/decomposition.hpp"
#include "polyo/generate.hpp"
#include "polyo/ideal_ops.hpp"
#include "polyo/io.hpp"

#include "fixtures.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

using namespace polyo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, double seconds,
               const std::string& detail = "") {
    std::cout << "CRITERION " << number << ": " << (ok ? "PASS" : "FAIL") << " [" << std::fixed
              << seconds << " s] " << label;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

bool has_interval(const std::vector<Interval>& list, Interval iv) {
    return std::find(list.begin(), list.end(), iv) != list.end();
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    Timer timer;
    std::ostringstream detail;
    bool ok = true;

    auto d = Polyocollection::of(fixtures::d());
    auto base = ideal_of(d);
    ok = ok && !is_prime_ideal_of(d);
    ok = ok && height(base) == 5;
    ok = ok && krull_dimension(base) == 9;
    ok = ok && base.ring().size() == 14;

    auto report = radical_decomposition(d);
    ok = ok && report.components.size() == 2;

    auto gens = base.gens();
    gens.push_back(parse_poly("x_1_2*x_2_4*x_4_1*x_5_3 - x_1_3*x_2_1*x_4_4*x_5_2", base.ring()));
    Ideal p1(base.ring_ptr(), gens);
    Ideal p2(base.ring_ptr(),
             {parse_poly("x_4_3", base.ring()), parse_poly("x_4_2", base.ring()),
              parse_poly("x_3_3", base.ring()), parse_poly("x_2_3", base.ring()),
              parse_poly("x_2_2", base.ring())});
    bool found_p1 = false, found_p2 = false;
    for (const auto& comp : report.components) {
        if (ideal_equal(comp.ideal, p1)) found_p1 = true;
        if (ideal_equal(comp.ideal, p2)) found_p2 = true;
        ok = ok && comp.height == 5;
    }
    ok = ok && found_p1 && found_p2;
    ok = ok && ideal_equal(intersect(p1, p2), base);
    ok = ok && report.intersection_equals_ideal && report.unmixed;

    double s = timer.seconds();
    ok = ok && s < 10.0;
    detail << "non-prime, height 5, dim 9, components {p1, p2} exact, intersection = ideal";
    criterion(1, "golden five-member collection", ok, s, detail.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    Timer timer;
    bool ok = true;

    ok = ok && Polyocollection::validate(fixtures::c1()).valid();
    ok = ok && Polyocollection::validate(fixtures::c2()).valid();
    ok = ok && Polyocollection::validate(fixtures::c4()).valid();
    auto r3 = Polyocollection::validate(fixtures::c3());
    ok = ok && !r3.valid();
    bool witness = false;
    for (const auto& v : r3.violations)
        witness = witness || (v.first == Interval({2, 1}, {4, 3}) &&
                              v.second == Interval({4, 1}, {5, 2}));
    ok = ok && witness;

    auto g1 = inner_intervals(Polyocollection::of(fixtures::c1()));
    ok = ok && has_interval(g1, Interval({1, 1}, {2, 3}));
    ok = ok && has_interval(g1, Interval({1, 1}, {5, 3}));
    auto g2 = inner_intervals(Polyocollection::of(fixtures::c2()));
    ok = ok && has_interval(g2, Interval({1, 3}, {7, 5}));
    ok = ok && has_interval(g2, Interval({3, 2}, {5, 7}));
    ok = ok && !has_interval(g2, Interval({3, 3}, {5, 5}));
    auto g4 = inner_intervals(Polyocollection::of(fixtures::c4()));
    ok = ok && has_interval(g4, Interval({1, 1}, {5, 5}));

    double s = timer.seconds();
    ok = ok && s < 1.0;
    criterion(2, "interval-collection example suite", ok, s,
              "validations and inner-interval memberships reproduced");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;

    auto cc = fixtures::ring26();
    auto walks = enumerate_zigzag_walks(cc);
    ok = ok && walks.size() == 4;
    for (const auto& w : walks) ok = ok && w.length() == 6;
    if (!walks.empty()) {
        auto n = necklace(walks.front());
        for (const auto& w : walks) ok = ok && necklace(w) == n;
    }
    auto report = verify_main_theorem(cc, true);
    ok = ok && report.all_passed();

    double s = timer.seconds();
    ok = ok && s < 60.0;
    detail << walks.size() << " walks of length 6, identical necklaces, decomposition verified";
    criterion(3, "26-cell cycle (figure transcription)", ok, s, detail.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;

    // The spec bound of 14 cells is unattainable: exhaustive search over all
    // closed paths (up to symmetry) finds no zig-zag walk below 16 cells, so
    // the sweep runs at the smallest sizes that exist.
    ok = ok && search_nonprime_closed_paths(14).empty();
    ok = ok && search_nonprime_closed_paths(15).empty();
    ok = ok && !search_nonprime_closed_paths(16).empty();

    auto stream = generate_closed_paths(20250810, 22, 120);
    int verified = 0;
    for (const auto& entry : stream) {
        if (entry.prime) continue;
        if (verified >= 20) break;
        auto report = verify_main_theorem(entry.cells, true);
        bool instance_ok = report.all_passed() && report.p1_equals_toric.value_or(false);
        if (!instance_ok) {
            detail << "instance " << entry.index << " failed; ";
            ok = false;
        }
        ++verified;
    }
    ok = ok && verified >= 20;

    double s = timer.seconds();
    ok = ok && s < 600.0;
    detail << "no non-prime cycles below 16 cells (exhaustive); " << verified
           << " seeded instances verified: I_P = p1 cap p2, heights = |P|, p1 = toric = lattice";
    criterion(4, "closed-path theorem sweep", ok, s, detail.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    Timer timer;
    std::ostringstream detail;
    bool ok = true;

    // (a)-(d) on 100 random valid collections.
    auto collections = generate_polyocollections(424242, 100, 16);
    int dets = 0, containments = 0, monomial_free = 0, pure = 0;
    for (const auto& c : collections) {
        if (c.empty()) continue;
        auto model = build_lattice_model(c);
        if (std::abs(model.determinant) == 1) ++dets;
        auto base = ideal_of(c);
        auto lat = lattice_ideal(c);
        if (contains(lat, base)) ++containments;
        bool clean = true;
        for (int v = 0; v < lat.ring().size(); ++v)
            clean = clean && !member(poly_variable(v), lat);
        if (clean) ++monomial_free;
        bool pd = true;
        for (const auto& g : base.groebner()) pd = pd && g.is_pure_difference_binomial();
        if (pd) ++pure;
    }
    int n = (int)collections.size();
    ok = ok && n >= 100 && dets == n && containments == n && monomial_free == n && pure == n;

    // (e) saturation route vs psi-kernel elimination, |V| <= 16.
    int psi_checked = 0;
    for (const auto& c : collections) {
        if (c.empty() || (int)c.vertices().size() > 16) continue;
        if (!ideal_equal(lattice_ideal(c), lattice_ideal_via_psi(c))) ok = false;
        ++psi_checked;
    }
    ok = ok && psi_checked >= 100;

    // (f) zig-zag existence vs the L-configuration / ladder characterization.
    auto paths = generate_closed_paths(777, 20, 140);
    int characterized = 0;
    for (const auto& entry : paths) {
        if ((int)entry.cells.size() > 20) continue;
        bool walkless = enumerate_zigzag_walks(entry.cells).empty();
        bool blocked = entry.cells.has_L_configuration() || entry.cells.has_ladder(3);
        if (walkless != blocked) ok = false;
        ++characterized;
    }
    ok = ok && characterized >= 100;

    // (g) radical decomposition compared against I_C, squarefree-aware.
    auto small = generate_polyocollections(99991, 100, 12);
    int decomposed = 0;
    for (const auto& c : small) {
        if (c.empty()) continue;
        auto base = ideal_of(c);
        auto report = radical_decomposition(c, 12);
        if (squarefree_initial_witness(base)) {
            if (!report.intersection_equals_ideal) ok = false;
        }
        // containment is asserted inside radical_decomposition; reaching here
        // means the intersection contains I_C.
        ++decomposed;
    }
    ok = ok && decomposed >= 100;

    detail << "dets " << dets << "/" << n << ", psi cross-checks " << psi_checked
           << ", characterization " << characterized << ", decompositions " << decomposed;
    criterion(5, "randomized property suites", ok, timer.seconds(), detail.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    Timer timer;
    bool ok = true;

    // Reconstructed five-cell collections: quotient dimensions must match.
    ok = ok && krull_dimension(ideal_of(fixtures::ring_diag5().as_polyocollection())) == 10;
    ok = ok && krull_dimension(ideal_of(fixtures::ring_far5().as_polyocollection())) == 11;
    criterion(6, "five-cell reconstruction dimensions", ok, timer.seconds(),
              "dims 10 and 11 reproduced from the reconstructed shapes");
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    std::cout << (failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASSED"
                                : "ACCEPTANCE: " + std::to_string(failures) + " CRITERIA FAILED")
              << " [" << total.seconds() << " s total]\n";
    return failures == 0 ? 0 : 1;
}
