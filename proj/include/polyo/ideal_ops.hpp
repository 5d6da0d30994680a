#pragma once

#include "polyo/ideal.hpp"

namespace polyo {

// I cap J via the tag-variable elimination t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : u^inf) via the extra-variable method: I + (1 - y*u), eliminate y.
Ideal saturate(const Ideal& ideal, const Monomial& u);

// (I : u) for a monomial u, via intersection with (u) and exact division.
Ideal colon(const Ideal& ideal, const Monomial& u);

// dim(S/I) from the independent sets of the initial ideal.  Throws
// input_error for the unit ideal; the zero ideal has dimension n.
int krull_dimension(const Ideal& ideal);
int height(const Ideal& ideal);

// True iff every leading monomial of the reduced basis is squarefree (a
// radicality witness; false is inconclusive).
bool squarefree_initial_witness(const Ideal& ideal);

bool is_homogeneous(const Ideal& ideal);

// Fresh auxiliary name not clashing with the ring's variables.
std::string fresh_aux_name(const Ring& ring, const std::string& stem);

// Saturation by the listed variables of a generating set homogeneous under
// the given positive weights (empty = standard grading); one graded basis
// pass per variable.  Building block for lattice and toric kernels.
std::vector<QPoly> graded_saturation_loop(std::vector<QPoly> gens, const std::vector<int>& vars,
                                          std::vector<int> weights);

}  // namespace polyo
