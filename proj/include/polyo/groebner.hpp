#pragma once

#include "polyo/poly.hpp"

#include <vector>

namespace polyo {

// Full normal form: every term of the remainder is reduced.  Divisor
// selection is by basis index, so the result is deterministic for a fixed
// basis sequence.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& order);

// Buchberger with the Gebauer-Moeller pair criteria and normal (smallest
// lcm) selection; returns the unique reduced basis, sorted ascending by
// leading monomial.
template <class K>
std::vector<Poly<K>> reduced_groebner_basis(std::vector<Poly<K>> gens, const MonomialOrder& order);

// Certificate check used by the test suites: every S-polynomial reduces to
// zero.  Quadratic; intended for small bases.
template <class K>
bool is_groebner_basis(const std::vector<Poly<K>>& basis, const MonomialOrder& order);

}  // namespace polyo
