#pragma once

// Shared instances used across the test suites.  The interval collections C1
// through C4 are small hand-checkable configurations; D is a five-member
// collection whose ideal decomposes into a binomial prime and a monomial
// prime; ring8/ring26/pinwheel16 are cycles of cells.

#include "polyo/cells.hpp"
#include "polyo/geometry.hpp"

#include <vector>

namespace polyo::fixtures {

inline std::vector<Interval> c1() {
    return {Interval({1, 1}, {2, 2}), Interval({1, 2}, {2, 3}), Interval({2, 1}, {5, 2}),
            Interval({2, 2}, {5, 3}), Interval({5, 3}, {7, 4})};
}

inline std::vector<Interval> c2() {
    return {Interval({3, 1}, {4, 2}), Interval({4, 1}, {5, 2}), Interval({3, 2}, {4, 6}),
            Interval({4, 2}, {5, 6}), Interval({3, 6}, {4, 7}), Interval({4, 6}, {5, 7}),
            Interval({1, 3}, {2, 4}), Interval({1, 4}, {2, 5}), Interval({2, 3}, {6, 4}),
            Interval({2, 4}, {6, 5}), Interval({6, 3}, {7, 4}), Interval({6, 4}, {7, 5})};
}

inline std::vector<Interval> c3() {
    return {Interval({1, 2}, {3, 4}), Interval({2, 1}, {4, 3}), Interval({4, 1}, {5, 2}),
            Interval({4, 2}, {5, 3})};
}

inline std::vector<Interval> c4() {
    return {Interval({1, 1}, {3, 3}), Interval({1, 3}, {3, 5}), Interval({3, 1}, {5, 3}),
            Interval({3, 3}, {5, 5}), Interval({2, 2}, {4, 4})};
}

// Five intervals with six inner intervals; fourteen vertices.
inline std::vector<Interval> d() {
    return {Interval({2, 1}, {4, 2}), Interval({1, 2}, {2, 3}), Interval({4, 2}, {5, 3}),
            Interval({2, 3}, {3, 4}), Interval({3, 3}, {4, 4})};
}

inline CellComplex ring8() {
    return CellComplex({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {1, 2}});
}

// The smallest cycle of cells admitting zig-zag walks: four straight strips
// of three cells joined by four step junctions.
inline CellComplex pinwheel16() {
    return CellComplex({{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 0}, {2, 0}, {3, 0}, {3, 1},
                        {4, 1}, {4, 2}, {4, 3}, {3, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 3}});
}

// A 26-cell cycle with four step junctions and two switchback junctions; it
// has exactly four zig-zag walks of length six.
inline CellComplex ring26() {
    return CellComplex({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0},
                        {0, 1}, {1, 1}, {7, 1}, {8, 1},
                        {0, 2}, {8, 2},
                        {0, 3}, {1, 3}, {3, 3}, {4, 3}, {5, 3}, {7, 3}, {8, 3},
                        {1, 4}, {2, 4}, {3, 4}, {5, 4}, {6, 4}, {7, 4}});
}

// Four cells around an enclosed unit square plus a second cell stacked on the
// northern one; the decomposition has a purely combinatorial golden value.
inline CellComplex ring_tower5() {
    return CellComplex({{2, 1}, {1, 2}, {3, 2}, {2, 3}, {2, 4}});
}

// Diagonal neighbour variant: dimension of the quotient is 10.
inline CellComplex ring_diag5() {
    return CellComplex({{2, 1}, {1, 2}, {3, 2}, {2, 3}, {3, 4}});
}

// Detached fifth cell: dimension of the quotient is 11.
inline CellComplex ring_far5() {
    return CellComplex({{2, 1}, {1, 2}, {3, 2}, {2, 3}, {2, 5}});
}

}  // namespace polyo::fixtures
