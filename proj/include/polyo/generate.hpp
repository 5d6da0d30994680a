#pragma once

#include "polyo/cells.hpp"

#include <cstdint>
#include <vector>

namespace polyo {

struct GeneratedPath {
    CellComplex cells;
    bool prime = true;  // label from the zig-zag detector
    std::uint64_t index = 0;
};

// Reproducible pseudo-random closed paths: a mix of free self-avoiding ring
// walks (mostly prime) and parametric step/switchback rings (mostly
// non-prime), labelled by the detector.  Deterministic for a fixed seed.
std::vector<GeneratedPath> generate_closed_paths(std::uint64_t seed, int max_cells, int count);

// Random valid polyocollections for the property suites: cell complexes and
// rejection-sampled interval families, deterministic per seed.
std::vector<Polyocollection> generate_polyocollections(std::uint64_t seed, int count,
                                                       int max_vertices = 16);

// Exhaustive search for closed paths admitting zig-zag walks, up to
// max_cells, returned in canonical form up to translation (cells shifted so
// the lexicographic minimum is the origin).  Establishes the minimal
// non-prime size.
std::vector<CellComplex> search_nonprime_closed_paths(int max_cells);

}  // namespace polyo
