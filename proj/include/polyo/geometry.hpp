#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyo {

// Thrown when an input violates a precondition (malformed fixture, improper
// interval, duplicate member).  Distinct from a negative verdict: an axiom
// violation in a candidate collection is reported as a value, not thrown.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed a configured size cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation contradicts a structural guarantee (for example
// a lattice matrix with determinant other than +-1); indicates a bug in the
// input validation or in this library, never a data-dependent verdict.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

struct Point {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

// Componentwise partial order; not the same as the lexicographic operator<.
inline bool leq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }
inline bool lt_strict(Point a, Point b) { return a.x < b.x && a.y < b.y; }

inline Point meet(Point a, Point b) { return {std::min(a.x, b.x), std::min(a.y, b.y)}; }
inline Point join(Point a, Point b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }

std::string to_string(Point p);

// Axis-aligned lattice box [lo, hi], allowed to be degenerate in one or both
// axes (an edge, or a single point).  Used for intersections and edges.
struct Box {
    Point lo;
    Point hi;

    bool contains(Point p) const { return leq(lo, p) && leq(p, hi); }
    bool contains(const Box& b) const { return leq(lo, b.lo) && leq(b.hi, hi); }
    long long lattice_points() const {
        return (long long)(hi.x - lo.x + 1) * (long long)(hi.y - lo.y + 1);
    }
    friend auto operator<=>(const Box&, const Box&) = default;
};

std::optional<Box> intersect(const Box& a, const Box& b);

// Proper interval of Z^2: ll < ur strictly in both coordinates.
struct Interval {
    Point ll;
    Point ur;

    Interval() = default;
    Interval(Point a, Point b);

    Point ul() const { return {ll.x, ur.y}; }
    Point lr() const { return {ur.x, ll.y}; }

    // Corner order: lower-left, upper-right, upper-left, lower-right.
    std::array<Point, 4> vertices() const { return {ll, ur, ul(), lr()}; }
    // Left, bottom, right, top.
    std::array<Box, 4> edges() const;

    Point opposite_corner(Point v) const;
    bool is_corner(Point v) const;
    // The two corners sharing an edge with v.
    std::array<Point, 2> adjacent_corners(Point v) const;
    bool diagonal_pair(Point a, Point b) const { return (a == ll && b == ur) || (a == ur && b == ll); }

    Box box() const { return {ll, ur}; }
    bool contains(Point p) const { return box().contains(p); }
    bool contains(const Interval& other) const { return box().contains(other.box()); }
    int width() const { return ur.x - ll.x; }
    int height() const { return ur.y - ll.y; }
    long long area() const { return (long long)width() * height(); }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

inline bool is_proper(Point a, Point b) { return a.x < b.x && a.y < b.y; }

// Why a pair of intervals fails the collection axioms.
enum class ViolationKind {
    Containment,  // one member contained in the other
    EdgeOverlap,  // some pair of edges meets in >= 2 points without being a common edge
};

struct Violation {
    Interval first;
    Interval second;
    ViolationKind kind;
};

std::string to_string(const Violation& v);

struct ValidationResult;

// A validated collection of proper intervals: any two members either meet in
// a common edge of both or have every edge-pair overlap of at most one point.
// Members are kept in canonical (ll, ur)-lexicographic order.  Instances are
// immutable after construction.
class Polyocollection {
  public:
    Polyocollection() = default;

    static ValidationResult validate(std::vector<Interval> intervals);
    // Convenience for inputs known to be valid; throws input_error otherwise.
    static Polyocollection of(std::vector<Interval> intervals);

    const std::vector<Interval>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    // All vertices of all members, sorted (x, y)-lexicographically.
    const std::vector<Point>& vertices() const;

    friend bool operator==(const Polyocollection&, const Polyocollection&) = default;

  private:
    explicit Polyocollection(std::vector<Interval> canonical) : members_(std::move(canonical)) {}

    std::vector<Interval> members_;
    mutable std::vector<Point> vertices_;  // computed on first use
};

struct ValidationResult {
    std::optional<Polyocollection> collection;  // set iff violations empty
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

// All intervals whose closure is a union of member closures.  Candidates have
// both corners in V(C); coverage is decided exactly on the coordinate grid
// refinement induced by the members contained in the candidate.
std::vector<Interval> inner_intervals(const Polyocollection& c);

// Members tiling c(I) with pairwise disjoint interiors.  Throws input_error
// if I is not an inner interval of c.
std::vector<Interval> tiling_witness(const Polyocollection& c, const Interval& inner);

// Equivalence classes of members under the transitive closure of sharing a
// vertex (a common edge implies shared vertices).
std::vector<Polyocollection> connected_components(const Polyocollection& c);

bool point_on_box_boundary(const Box& b, Point p);

}  // namespace polyo
