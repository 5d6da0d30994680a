#pragma once

#include "polyo/cells.hpp"

#include <array>
#include <optional>
#include <vector>

namespace polyo {

// A cyclic sequence of inner intervals meeting corner to corner: interval i
// is entered at corner v[i] and left at the adjacent corner v[i+1]; z[i] is
// opposite v[i], u[i] opposite v[i+1].  Stored in canonical rotation and
// direction (smallest v first, then smallest vertex tuple) so walks compare
// by value.
struct ZigZagWalk {
    std::vector<Interval> intervals;
    std::vector<Point> v;
    std::vector<Point> z;
    std::vector<Point> u;

    int length() const { return (int)intervals.size(); }
    friend bool operator==(const ZigZagWalk&, const ZigZagWalk&) = default;
    friend auto operator<=>(const ZigZagWalk& a, const ZigZagWalk& b) { return a.v <=> b.v; }
};

// All lattice points on the connecting segments [v_i, v_{i+1}].
std::vector<Point> necklace(const ZigZagWalk& walk);

struct EnumerationCaps {
    int max_vertices = 40;  // refusal bound for the generic enumerator
    int max_walks = 10000;
};

// All zig-zag walks in canonical form.  Closed paths use the specialized
// junction enumerator; other complexes fall back to the generic search
// (which refuses above caps.max_vertices).
std::vector<ZigZagWalk> enumerate_zigzag_walks(const CellComplex& cc,
                                               EnumerationCaps caps = {});

// Generic depth-first search straight from the definition; doubles as the
// oracle for the specialized enumerator.
std::vector<ZigZagWalk> zigzag_walks_bruteforce(const CellComplex& cc,
                                                EnumerationCaps caps = {});

// How two straight strips of a closed path meet: a three-cell turning run
// (step) forces the shared corner into every walk; a two-cell run
// (switchback) offers a choice between the two shared vertices.
enum class JunctionType { Step, Switchback };

struct Junction {
    JunctionType type;
    std::vector<Point> run_cells;        // the turning run, in path order
    Point shared_corner;                 // step: corner common to all three cells
    Point outer_corner;                  // step: opposite corner of the middle cell
    std::array<Point, 2> choices;        // switchback: candidate walk vertices
    Interval switch_interval;            // switchback: spanning 1x2 inner interval
};

struct ClosedPathStructure {
    std::vector<Point> sequence;         // the cell cycle
    bool walkable = false;               // every turning run has length 2 or 3
    std::vector<Junction> junctions;     // cyclic order along the path
    std::vector<Interval> strips;        // strips[k] runs from junction k to k+1
};

// Classifies the turning runs of a closed path.  Throws input_error if the
// complex is not a closed path.
ClosedPathStructure analyze_closed_path(const CellComplex& cc);

// The necklace / outer-corner / switchback data of a closed path with at
// least one zig-zag walk (throws input_error otherwise).
std::vector<Point> necklace_of(const CellComplex& cc);
std::vector<Point> m_set(const CellComplex& cc);
std::vector<Interval> r_set(const CellComplex& cc);

}  // namespace polyo
