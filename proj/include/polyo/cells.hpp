#pragma once

#include "polyo/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyo {

// A maximal straight run of cells, stored with its geometric interval.
struct Block {
    bool horizontal = true;
    std::vector<Point> cells;  // lower-left corners, in axis order
    Interval extent() const;
    int rank() const { return (int)cells.size(); }
};

struct ClosedPathFailure {
    // Which closed-path requirement failed: "size" (n <= 5), "degree" (a cell
    // without exactly two edge-neighbours), "cycle" (not one single cycle),
    // "vertex-disjointness" (far-apart cells sharing a vertex), "empty".
    std::string reason;
    std::vector<Point> witness_cells;
};

struct ClosedPathResult {
    std::optional<std::vector<Point>> sequence;  // canonical cyclic order
    std::optional<ClosedPathFailure> failure;
    bool ok() const { return sequence.has_value(); }
};

struct HoleReport {
    bool simple = false;
    std::vector<std::vector<Point>> holes;  // each hole as a sorted cell list
};

struct LConfiguration {
    std::array<Point, 5> cells;  // path C1..C5, two orthogonal straight triples
};

struct Ladder {
    std::vector<Block> blocks;  // all horizontal or all vertical, rank >= 2
    int steps() const { return (int)blocks.size(); }
};

// A finite set of unit cells, identified by their lower-left corners.
// Viewed as a polyocollection every cell is a 1x1 member; that validation is
// trivially satisfied, so construction only rejects duplicates.
class CellComplex {
  public:
    CellComplex() = default;
    explicit CellComplex(std::vector<Point> cells);

    const std::vector<Point>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains_cell(Point c) const;

    Polyocollection as_polyocollection() const;
    std::vector<Point> vertices() const;

    std::vector<Block> maximal_blocks(bool horizontal, int min_rank = 1) const;

    // Maximal runs of collinear vertices whose unit segments are all cell
    // edges.  Returned as degenerate boxes, sorted.
    std::vector<Box> edge_intervals(bool horizontal) const;
    // Index of the maximal horizontal/vertical edge interval through p, or -1.
    int edge_interval_index(bool horizontal, Point p) const;

    HoleReport holes() const;
    bool is_simple() const { return holes().simple; }

    ClosedPathResult closed_path() const;

    std::vector<LConfiguration> find_L_configurations() const;
    std::vector<Ladder> find_ladders(int min_steps) const;
    bool has_L_configuration() const;
    bool has_ladder(int min_steps) const;

    // Inner intervals via the cell criterion: I is inner iff every cell
    // inside I belongs to the complex.
    std::vector<Interval> inner_intervals() const;

  private:
    std::vector<Point> cells_;  // sorted, unique
    mutable std::vector<Box> h_edge_intervals_, v_edge_intervals_;
    mutable bool edges_built_ = false;
    void build_edge_intervals() const;
};

inline Interval cell_interval(Point c) { return Interval(c, {c.x + 1, c.y + 1}); }

}  // namespace polyo
