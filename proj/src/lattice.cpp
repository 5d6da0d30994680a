#include "polyo/lattice.hpp"

#include "polyo/ideal_ops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polyo {

namespace {

// Fraction-free Bareiss elimination; exact integer determinant.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Exact rational solve by Gauss-Jordan with partial pivoting.
std::vector<mpq_class> solve_exact(const std::vector<std::vector<long long>>& a,
                                   std::vector<mpq_class> rhs) {
    const std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (long)a[i][j];
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) throw invariant_violation("singular lattice matrix");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        mpq_class inv = 1 / m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            mpq_class f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

LatticeModel build_lattice_model(const Polyocollection& c) {
    if (c.empty()) throw input_error("lattice model of an empty collection");
    LatticeModel model;
    model.vertices = c.vertices();
    model.members = c.members();

    std::set<Point> lower_left;
    for (const auto& m : model.members) lower_left.insert(m.ll);
    for (Point v : model.vertices)
        if (!lower_left.count(v)) model.free_vertices.push_back(v);

    const std::size_t n = model.vertices.size();
    if (model.members.size() + model.free_vertices.size() != n)
        throw invariant_violation("members plus free vertices do not count the vertex set");

    auto row_of = [&](Point p) {
        return std::lower_bound(model.vertices.begin(), model.vertices.end(), p) -
               model.vertices.begin();
    };
    model.matrix.assign(n, std::vector<long long>(n, 0));
    std::size_t col = 0;
    for (const auto& m : model.members) {
        model.matrix[row_of(m.ll)][col] += 1;
        model.matrix[row_of(m.ur)][col] += 1;
        model.matrix[row_of(m.ul())][col] -= 1;
        model.matrix[row_of(m.lr())][col] -= 1;
        ++col;
    }
    for (Point f : model.free_vertices) model.matrix[row_of(f)][col++] = 1;

    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) z[i][j] = (long)model.matrix[i][j];
    mpz_class det = bareiss_determinant(std::move(z));
    if (det != 1 && det != -1)
        throw invariant_violation("lattice matrix determinant is " + det.get_str() +
                                  ", expected +-1; the collection failed validation somewhere");
    model.determinant = (long long)det.get_si();
    return model;
}

VertexSolution solve_vertex(const LatticeModel& model, Point a) {
    const std::size_t n = model.vertices.size();
    auto it = std::lower_bound(model.vertices.begin(), model.vertices.end(), a);
    if (it == model.vertices.end() || *it != a)
        throw input_error("point " + to_string(a) + " is not a vertex of the collection");
    std::vector<mpq_class> rhs(n, 0);
    rhs[it - model.vertices.begin()] = 1;
    auto sol = solve_exact(model.matrix, std::move(rhs));
    VertexSolution out;
    for (std::size_t j = 0; j < n; ++j) {
        if (sol[j].get_den() != 1)
            throw invariant_violation("non-integer solution against a unimodular matrix");
        long long v = (long long)sol[j].get_num().get_si();
        if (j < model.members.size())
            out.member_coeffs.push_back(v);
        else
            out.free_coeffs.push_back(v);
    }
    return out;
}

std::vector<long long> psi_coefficients(const LatticeModel& model, Point a) {
    return solve_vertex(model, a).free_coeffs;
}

std::string lattice_matrix_csv(const LatticeModel& model) {
    std::ostringstream out;
    out << "vertex";
    for (const auto& m : model.members) out << "," << to_string(m);
    for (Point f : model.free_vertices) out << "," << to_string(f);
    out << "\n";
    for (std::size_t i = 0; i < model.vertices.size(); ++i) {
        out << to_string(model.vertices[i]);
        for (std::size_t j = 0; j < model.vertices.size(); ++j) out << "," << model.matrix[i][j];
        out << "\n";
    }
    return out.str();
}

Ideal lattice_ideal(const Polyocollection& c) {
    return lattice_ideal(c, Ring::vertex_ring(c.vertices()));
}

Ideal lattice_ideal(const Polyocollection& c, std::shared_ptr<const Ring> ring) {
    Ideal base = ideal_of(c, ring);
    if (c.empty()) return base;
    std::vector<std::pair<int, int>> all;
    for (Point v : c.vertices()) {
        int idx = ring->index_of_vertex(v);
        if (idx < 0) throw input_error("ring lacks vertex variable " + to_string(v));
        all.emplace_back(idx, 1);
    }
    return saturate(base, Monomial(std::move(all)));
}

Ideal lattice_ideal_via_psi(const Polyocollection& c) {
    auto base = Ring::vertex_ring(c.vertices());
    if (c.empty()) return Ideal(base, {});
    auto model = build_lattice_model(c);

    // One target variable per free vertex plus one inverter q with
    // q * prod(y_b) = 1, so negative psi exponents become positive ones.
    std::vector<std::string> aux{"q"};
    for (Point f : model.free_vertices)
        aux.push_back("y_" + std::to_string(f.x) + "_" + std::to_string(f.y));
    auto ext = Ring::extend_front(aux, *base);
    const int naux = (int)aux.size();

    std::vector<QPoly> gens;
    for (std::size_t vi = 0; vi < model.vertices.size(); ++vi) {
        Point a = model.vertices[vi];
        auto mu = psi_coefficients(model, a);
        std::vector<std::pair<int, int>> lhs{{naux + (int)vi, 1}};
        std::vector<std::pair<int, int>> rhs;
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (mu[j] > 0) rhs.emplace_back(1 + (int)j, (int)mu[j]);
            if (mu[j] < 0) lhs.emplace_back(1 + (int)j, (int)-mu[j]);
        }
        gens.push_back(pure_difference(Monomial(std::move(lhs)), Monomial(std::move(rhs)),
                                       ext->order()));
    }
    std::vector<std::pair<int, int>> qy{{0, 1}};
    for (int j = 0; j < (int)model.free_vertices.size(); ++j) qy.emplace_back(1 + j, 1);
    gens.push_back(QPoly::from_terms(
        {{Monomial(std::move(qy)), Rational(1)}, {Monomial(), Rational(-1)}}, ext->order()));

    auto gb = reduced_groebner_basis(std::move(gens), ext->order());
    std::vector<QPoly> kept;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (auto& [v, e] : t.mono.exps())
                if (v < naux) pure = false;
        if (pure) kept.push_back(shift_vars(g, -naux, base->order()));
    }
    return Ideal::with_known_basis(base, std::move(kept));
}

bool is_prime_ideal_of(const Polyocollection& c) {
    if (c.empty()) return true;
    return ideal_equal(ideal_of(c), lattice_ideal(c));
}

int binomial_height_bound(const Ideal& ideal) {
    const auto& gens = ideal.gens();
    const int n = ideal.ring().size();
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_pure_difference_binomial())
            throw input_error("binomial height bound needs pure-difference binomial generators");
        std::vector<mpz_class> row(n, 0);
        for (auto& [v, e] : g.terms()[0].mono.exps()) row[v] += e;
        for (auto& [v, e] : g.terms()[1].mono.exps()) row[v] -= e;
        rows.push_back(std::move(row));
    }
    // Exact rank by fraction-free elimination.
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < (std::size_t)n && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        for (std::size_t i = lead + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            mpz_class f1 = rows[lead][col], f2 = rows[i][col];
            for (std::size_t j = col; j < (std::size_t)n; ++j)
                rows[i][j] = rows[i][j] * f1 - rows[lead][j] * f2;
        }
        ++lead;
        ++rank;
    }
    return rank;
}

std::array<std::vector<Point>, 2> step_weight_sets(const Junction& j) {
    if (j.type != JunctionType::Step) throw input_error("not a step junction");
    auto labelled = [&](Point y_cell, Point z_cell) {
        Interval Y = cell_interval(y_cell), X = cell_interval(j.run_cells[1]),
                 Z = cell_interval(z_cell);
        Point dd = j.shared_corner;
        Point b{};
        for (Point p : Y.vertices())
            if (p != dd && X.is_corner(p)) b = p;
        Point a = Y.opposite_corner(dd);
        Point c = Y.opposite_corner(b);
        Point d1{};
        for (Point p : Z.vertices())
            if (p != dd && X.is_corner(p)) d1 = p;
        Point e = Z.opposite_corner(d1);
        std::vector<Point> out{a, b, c, dd, e};
        std::sort(out.begin(), out.end());
        return out;
    };
    return {labelled(j.run_cells[0], j.run_cells[2]), labelled(j.run_cells[2], j.run_cells[0])};
}

ToricModel build_toric_model(const CellComplex& cc) {
    auto s = analyze_closed_path(cc);
    std::vector<const Junction*> steps;
    for (const auto& j : s.junctions)
        if (j.type == JunctionType::Step) steps.push_back(&j);
    if (steps.empty())
        throw input_error(
            "the toric model needs a step junction (a three-cell turning run); this closed path "
            "has none");
    const Junction* pick = steps.front();
    for (const auto* j : steps)
        if (j->outer_corner < pick->outer_corner) pick = j;

    auto sets = step_weight_sets(*pick);
    ToricModel model;
    model.base = Ring::vertex_ring(cc.as_polyocollection().vertices());
    model.h_intervals = cc.edge_intervals(true);
    model.v_intervals = cc.edge_intervals(false);
    model.weighted = std::min(sets[0], sets[1]);
    model.junction_outer = pick->outer_corner;
    return model;
}

std::vector<std::vector<long long>> integer_kernel_basis(
    const std::vector<std::vector<long long>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = (long)a[i][j];
    // Unimodular column operations tracked in t.
    std::vector<std::vector<mpz_class>> t(cols, std::vector<mpz_class>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) t[j][j] = 1;

    auto col_combine = [&](std::size_t r, std::size_t c1, std::size_t c2) {
        // Zero m[r][c2] with the extended gcd of (m[r][c1], m[r][c2]).
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), m[r][c1].get_mpz_t(),
                   m[r][c2].get_mpz_t());
        mpz_class p = m[r][c1] / g, q = m[r][c2] / g;
        for (std::size_t i = 0; i < rows; ++i) {
            mpz_class n1 = u * m[i][c1] + v * m[i][c2];
            mpz_class n2 = -q * m[i][c1] + p * m[i][c2];
            m[i][c1] = n1;
            m[i][c2] = n2;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            mpz_class n1 = u * t[i][c1] + v * t[i][c2];
            mpz_class n2 = -q * t[i][c1] + p * t[i][c2];
            t[i][c1] = n1;
            t[i][c2] = n2;
        }
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        std::size_t pivot = lead;
        while (pivot < cols && m[r][pivot] == 0) ++pivot;
        if (pivot == cols) continue;
        if (pivot != lead) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][lead], m[i][pivot]);
            for (std::size_t i = 0; i < cols; ++i) std::swap(t[i][lead], t[i][pivot]);
        }
        for (std::size_t j = lead + 1; j < cols; ++j)
            if (m[r][j] != 0) col_combine(r, lead, j);
        ++lead;
    }
    std::vector<std::vector<long long>> basis;
    for (std::size_t j = lead; j < cols; ++j) {
        std::vector<long long> vec(cols);
        for (std::size_t i = 0; i < cols; ++i) {
            if (!t[i][j].fits_slong_p())
                throw invariant_violation("integer kernel entry out of range");
            vec[i] = t[i][j].get_si();
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

Ideal monomial_map_kernel(std::shared_ptr<const Ring> base,
                          const std::vector<std::vector<int>>& target_exponents,
                          const std::vector<std::vector<long long>>& known_kernel_vectors) {
    const int n = base->size();
    if ((int)target_exponents.size() != n)
        throw input_error("one target exponent vector per ring variable required");
    const std::size_t m = target_exponents.empty() ? 0 : target_exponents[0].size();

    std::vector<std::vector<long long>> a(m, std::vector<long long>(n, 0));
    std::vector<int> weights(n, 0);
    for (int j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            a[i][j] = target_exponents[j][i];
            weights[j] += target_exponents[j][i];
        }
        if (weights[j] <= 0)
            throw input_error("monomial map must send every variable to a nonconstant monomial");
    }

    // The span of the generators below is exactly ker_Z(A): the computed
    // basis alone spans it, and extra vectors are verified to lie inside.
    std::vector<std::vector<long long>> vectors = integer_kernel_basis(a);
    for (const auto& vec : known_kernel_vectors) {
        if ((int)vec.size() != n) throw input_error("kernel vector of wrong dimension");
        for (std::size_t i = 0; i < m; ++i) {
            long long dot = 0;
            for (int j = 0; j < n; ++j) dot += a[i][j] * vec[j];
            if (dot != 0) throw input_error("claimed kernel vector is not in the kernel");
        }
        vectors.push_back(vec);
    }

    std::vector<QPoly> gens;
    auto order0 = MonomialOrder::degrevlex_cheapest(0, weights);
    for (const auto& vec : vectors) {
        std::vector<std::pair<int, int>> plus, minus;
        for (int j = 0; j < n; ++j) {
            if (vec[j] > 0) plus.emplace_back(j, (int)vec[j]);
            if (vec[j] < 0) minus.emplace_back(j, (int)-vec[j]);
        }
        gens.push_back(pure_difference(Monomial(std::move(plus)), Monomial(std::move(minus)),
                                       order0));
    }
    std::vector<int> all_vars(n);
    for (int j = 0; j < n; ++j) all_vars[j] = j;
    auto sat = graded_saturation_loop(std::move(gens), all_vars, weights);
    for (auto& g : sat)
        g = QPoly::from_terms({g.terms().begin(), g.terms().end()}, base->order());
    return Ideal(std::move(base), std::move(sat));
}

Ideal monomial_map_kernel_elimination(std::shared_ptr<const Ring> base,
                                      const std::vector<std::vector<int>>& target_exponents) {
    const int n = base->size();
    if ((int)target_exponents.size() != n)
        throw input_error("one target exponent vector per ring variable required");
    const int m = target_exponents.empty() ? 0 : (int)target_exponents[0].size();
    std::vector<std::string> aux;
    for (int i = 0; i < m; ++i) aux.push_back(fresh_aux_name(*base, "e" + std::to_string(i)));
    auto ext = Ring::extend_front(aux, *base);
    std::vector<QPoly> gens;
    for (int j = 0; j < n; ++j) {
        std::vector<std::pair<int, int>> target;
        for (int i = 0; i < m; ++i)
            if (target_exponents[j][i] > 0) target.emplace_back(i, target_exponents[j][i]);
        gens.push_back(pure_difference(Monomial({{m + j, 1}}), Monomial(std::move(target)),
                                       ext->order()));
    }
    auto gb = reduced_groebner_basis(std::move(gens), ext->order());
    std::vector<QPoly> kept;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& term : g.terms())
            for (auto& [v, e] : term.mono.exps())
                if (v < m) pure = false;
        if (pure) kept.push_back(shift_vars(g, -m, base->order()));
    }
    return Ideal::with_known_basis(base, std::move(kept));
}

namespace {

Ideal toric_kernel(const CellComplex& cc, const ToricModel& model) {
    const auto& base = model.base;
    const int nv = (int)model.v_intervals.size(), nh = (int)model.h_intervals.size();
    std::vector<std::vector<int>> targets;
    for (int i = 0; i < base->size(); ++i) {
        Point r = base->var(i).point();
        int vi = cc.edge_interval_index(false, r);
        int hj = cc.edge_interval_index(true, r);
        if (vi < 0 || hj < 0) throw invariant_violation("vertex off every edge interval");
        std::vector<int> exps(1 + nv + nh, 0);
        if (std::binary_search(model.weighted.begin(), model.weighted.end(), r)) exps[0] = 1;
        exps[1 + vi] = 1;
        exps[1 + nv + hj] = 1;
        targets.push_back(std::move(exps));
    }
    // Inner 2-minors lie in the kernel (their corner pairs share edge
    // intervals); seeding them starts the saturation near its fixed point.
    // Every seed is re-verified against the exponent matrix.
    std::vector<std::vector<long long>> seeds;
    for (const Interval& iv : cc.inner_intervals()) {
        std::vector<long long> vec(base->size(), 0);
        vec[base->index_of_vertex(iv.ll)] += 1;
        vec[base->index_of_vertex(iv.ur)] += 1;
        vec[base->index_of_vertex(iv.ul())] -= 1;
        vec[base->index_of_vertex(iv.lr())] -= 1;
        seeds.push_back(std::move(vec));
    }
    return monomial_map_kernel(base, targets, seeds);
}

}  // namespace

Ideal toric_ideal_JP(const CellComplex& cc, JunctionChoice choice) {
    auto model = build_toric_model(cc);
    Ideal main = toric_kernel(cc, model);
    if (choice == JunctionChoice::All) {
        auto s = analyze_closed_path(cc);
        for (const auto& j : s.junctions) {
            if (j.type != JunctionType::Step) continue;
            for (const auto& weighted : step_weight_sets(j)) {
                ToricModel variant = model;
                variant.weighted = weighted;
                variant.junction_outer = j.outer_corner;
                if (!ideal_equal(toric_kernel(cc, variant), main))
                    throw invariant_violation(
                        "toric kernels differ across step junction choices at " +
                        to_string(j.outer_corner));
            }
        }
    }
    return main;
}

}  // namespace polyo
