#pragma once

#include "polyo/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyo {

struct AdmissibleCheck {
    bool admissible = false;
    std::optional<Interval> violating;  // first inner interval breaking the rule
};

// X is admissible when every inner interval either misses X entirely or
// meets it in the two endpoints of one of its edges.
AdmissibleCheck is_admissible(const Polyocollection& c, const std::vector<Point>& x);

// All admissible subsets of V(C), canonically sorted.  Refuses via
// cap_exceeded when |V(C)| exceeds the cap.
std::vector<std::vector<Point>> enumerate_admissible_sets(const Polyocollection& c,
                                                          int vertex_cap = 24);

// The polyocollection whose inner intervals are exactly the inner intervals
// of C avoiding X (the minimal ones generate it).  Throws input_error if X
// is not admissible.
Polyocollection derived_polyocollection(const Polyocollection& c, const std::vector<Point>& x);

// J_X = (x_a : a in X) + L of the derived polyocollection, in the canonical
// vertex ring of V(C) (or a caller-supplied ring containing it).
Ideal j_ideal(const Polyocollection& c, const std::vector<Point>& x);
Ideal j_ideal(const Polyocollection& c, const std::vector<Point>& x,
              std::shared_ptr<const Ring> ring);

struct DecompositionComponent {
    Ideal ideal;
    std::string provenance;           // "J_X", "p1", "p2"
    std::vector<Point> admissible_set;
    int height = 0;
};

struct DecompositionReport {
    std::vector<DecompositionComponent> components;  // minimal, deduplicated
    int admissible_count = 0;
    int candidate_count = 0;  // distinct J_X before minimalization
    int base_height = 0;
    bool intersection_equals_ideal = false;  // cap of components == I_C exactly
    bool unmixed = false;                    // all components share the base height
    double seconds = 0.0;
};

// The minimal members of { J_X : X admissible } with the verdict whether
// their intersection equals I_C (then I_C is radical on this instance) or
// strictly contains it.
DecompositionReport radical_decomposition(const Polyocollection& c, int vertex_cap = 24);

// f_W: product of the z-variables minus the product of the u-variables.
QPoly zigzag_binomial(const ZigZagWalk& walk, const Ring& ring);

// Ideal of all walk binomials; empty for walk-free complexes.
Ideal z_ideal(const CellComplex& cc);
Ideal z_ideal(const CellComplex& cc, std::shared_ptr<const Ring> ring);

// The two minimal primes of a non-prime closed path: p1 = I_P + Z_P and
// p2 = necklace and outer-corner variables plus the switchback 2-minors.
// Both throw input_error when the path has no zig-zag walk.
Ideal closed_path_p1(const CellComplex& cc);
Ideal closed_path_p2(const CellComplex& cc);

struct MainTheoremReport {
    int cells = 0;
    int walk_count = 0;
    bool p1_is_lattice_ideal = false;   // p1 == L_P, certifying p1 prime
    bool p2_structurally_prime = false; // disjoint variable blocks
    bool intersection_equals = false;   // p1 cap p2 == I_P
    int height_p1 = 0, height_p2 = 0, height_ip = 0;
    bool heights_match = false;         // all equal to the cell count
    bool unmixed = false;
    bool necklace_partition = false;    // |N| + |M| + |R| == |P|
    int exponent_rank_p1 = 0;           // Q-rank of p1's exponent vectors
    std::optional<bool> p1_equals_toric;  // set when the toric route is run
    double seconds = 0.0;

    bool all_passed() const {
        return p1_is_lattice_ideal && p2_structurally_prime && intersection_equals &&
               heights_match && unmixed && necklace_partition &&
               p1_equals_toric.value_or(true);
    }
};

// Checks the closed-path decomposition I_P = p1 cap p2 with height and
// unmixedness verdicts.  with_toric additionally compares p1 against the
// toric kernel.  Throws input_error for prime closed paths.
MainTheoremReport verify_main_theorem(const CellComplex& cc, bool with_toric = false,
                                      JunctionChoice choice = JunctionChoice::LexMin);

}  // namespace polyo
