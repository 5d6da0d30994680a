#pragma once

#include "polyo/cells.hpp"
#include "polyo/ideal.hpp"
#include "polyo/zigzag.hpp"

#include <array>
#include <string>
#include <vector>

namespace polyo {

// The square integer matrix whose columns are the member vectors
// v_I = v_a + v_b - v_c - v_d followed by the unit vectors of the free
// vertices (vertices that are no member's lower-left corner).  Rows are
// labelled by V(C) in (x, y)-lexicographic order.  The matrix is unimodular;
// construction fails hard otherwise.
struct LatticeModel {
    std::vector<Point> vertices;
    std::vector<Interval> members;
    std::vector<Point> free_vertices;
    std::vector<std::vector<long long>> matrix;  // rows x columns
    long long determinant = 0;
};

LatticeModel build_lattice_model(const Polyocollection& c);

// Exact integer solution of M * lambda = e_a, split into the member part and
// the free-vertex part (the exponents of the map psi).
struct VertexSolution {
    std::vector<long long> member_coeffs;
    std::vector<long long> free_coeffs;
};
VertexSolution solve_vertex(const LatticeModel& model, Point a);
std::vector<long long> psi_coefficients(const LatticeModel& model, Point a);

// Rows labelled by vertices, columns by members then free vertices.
std::string lattice_matrix_csv(const LatticeModel& model);

// The lattice ideal L_C, computed as the saturation of I_C by the product of
// all vertex variables.
Ideal lattice_ideal(const Polyocollection& c);
Ideal lattice_ideal(const Polyocollection& c, std::shared_ptr<const Ring> ring);

// Independent route: kernel of the monomial map psi by elimination, with one
// Laurent-inverting variable.  Used as a cross-check.
Ideal lattice_ideal_via_psi(const Polyocollection& c);

// I_C prime iff I_C == L_C.
bool is_prime_ideal_of(const Polyocollection& c);

// Exact rank over Q of the exponent-difference vectors of a pure-difference
// binomial generating set; an upper bound for the height.
int binomial_height_bound(const Ideal& ideal);

// The toric model of a closed path: one variable per maximal horizontal and
// vertical edge interval plus w, with w weighting the five verices of one
// step junction.
struct ToricModel {
    std::shared_ptr<const Ring> base;        // vertex ring of V(P)
    std::vector<Box> h_intervals, v_intervals;
    std::vector<Point> weighted;             // the five w-carrying vertices
    Point junction_outer;                    // the m vertex of the chosen junction
};

// Both orientation labellings of a step junction's five weighted vertices.
std::array<std::vector<Point>, 2> step_weight_sets(const Junction& j);

enum class JunctionChoice { LexMin, All };

// Kernel of the toric map.  With JunctionChoice::All every step junction and
// orientation is computed and compared; a mismatch raises
// invariant_violation.
Ideal toric_ideal_JP(const CellComplex& cc, JunctionChoice choice = JunctionChoice::LexMin);
ToricModel build_toric_model(const CellComplex& cc);

// Kernel of the monomial map x_i -> prod target^exponents[i], an ideal of
// `base`.  Default route: a Z-basis of the integer kernel of the exponent
// matrix, saturated by all variables under the map-degree grading.  Extra
// known kernel vectors may be passed to precondition the saturation; they
// must lie in the kernel (checked).
Ideal monomial_map_kernel(std::shared_ptr<const Ring> base,
                          const std::vector<std::vector<int>>& target_exponents,
                          const std::vector<std::vector<long long>>& known_kernel_vectors = {});
// Direct elimination over adjoined target variables.  The basis explodes
// beyond toy sizes, so this serves as a small-instance cross-check.
Ideal monomial_map_kernel_elimination(std::shared_ptr<const Ring> base,
                                      const std::vector<std::vector<int>>& target_exponents);

// Z-basis of { x : A x = 0 } by unimodular column reduction.
std::vector<std::vector<long long>> integer_kernel_basis(
    const std::vector<std::vector<long long>>& a);

}  // namespace polyo
