#include "polyo/ideal_ops.hpp"

#include <algorithm>

namespace polyo {

std::string fresh_aux_name(const Ring& ring, const std::string& stem) {
    std::string name = stem;
    int n = 0;
    while (ring.has(VarId::aux(name))) name = stem + std::to_string(n++);
    return name;
}

namespace {

// Extract the elements free of the first `naux` variables and re-index them
// into the base ring.  For a reduced basis under the elimination order this
// is the reduced basis of the elimination ideal when the base order is
// degrevlex.
Ideal eliminate_front(const std::vector<QPoly>& gb, int naux,
                      const std::shared_ptr<const Ring>& base) {
    std::vector<QPoly> kept;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (auto& [v, e] : t.mono.exps())
                if (v < naux) {
                    pure = false;
                    break;
                }
        if (pure) kept.push_back(shift_vars(g, -naux, base->order()));
    }
    if (base->order() == MonomialOrder::degrevlex())
        return Ideal::with_known_basis(base, std::move(kept));
    return Ideal(base, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!(a.ring() == b.ring())) throw input_error("intersect: rings differ");
    auto base = a.ring_ptr();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal(base, {});
    if (a.is_unit_ideal()) return b;
    if (b.is_unit_ideal()) return a;

    auto ext = Ring::extend_front({fresh_aux_name(a.ring(), "t")}, a.ring());
    QPoly t = poly_variable(0);
    QPoly one_minus_t =
        QPoly::from_terms({{Monomial(), Rational(1)}, {Monomial::variable(0), Rational(-1)}},
                          ext->order());
    std::vector<QPoly> gens;
    for (const auto& f : a.gens()) {
        if (f.is_zero()) continue;
        gens.push_back(multiply(t, shift_vars(f, 1, ext->order()), ext->order()));
    }
    for (const auto& g : b.gens()) {
        if (g.is_zero()) continue;
        gens.push_back(multiply(one_minus_t, shift_vars(g, 1, ext->order()), ext->order()));
    }
    auto gb = reduced_groebner_basis(std::move(gens), ext->order());
    return eliminate_front(gb, 1, base);
}

namespace {

Ideal saturate_extra_variable(const Ideal& ideal, const Monomial& u) {
    auto base = ideal.ring_ptr();
    auto ext = Ring::extend_front({fresh_aux_name(ideal.ring(), "y")}, ideal.ring());
    std::vector<QPoly> gens;
    for (const auto& f : ideal.gens())
        if (!f.is_zero()) gens.push_back(shift_vars(f, 1, ext->order()));
    // 1 - y*u
    std::vector<std::pair<int, int>> yu{{0, 1}};
    for (auto& [v, e] : u.exps()) yu.emplace_back(v + 1, e);
    gens.push_back(QPoly::from_terms(
        {{Monomial(), Rational(1)}, {Monomial(std::move(yu)), Rational(-1)}}, ext->order()));
    auto gb = reduced_groebner_basis(std::move(gens), ext->order());
    return eliminate_front(gb, 1, base);
}

}  // namespace

// For an ideal homogeneous under the (possibly weighted) grading, computed
// under degrevlex with v cheapest, v divides an element iff it divides the
// leading term, so one basis pass and a division compute (I : v^inf).
// Variables are handled one at a time; colons compose.
std::vector<QPoly> graded_saturation_loop(std::vector<QPoly> gens, const std::vector<int>& vars,
                                          std::vector<int> weights) {
    for (int var : vars) {
        auto order = MonomialOrder::degrevlex_cheapest(var, weights);
        auto gb = reduced_groebner_basis(gens, order);
        gens.clear();
        for (const auto& g : gb) {
            int common = 1 << 30;
            for (const auto& t : g.terms()) common = std::min(common, t.mono.exponent(var));
            if (common == 0) {
                gens.push_back(g);
                continue;
            }
            Monomial divisor = Monomial::variable(var, common);
            std::vector<Term<Rational>> ts;
            for (const auto& t : g.terms()) ts.push_back({t.mono / divisor, t.coeff});
            gens.push_back(QPoly::from_sorted(std::move(ts)));
        }
    }
    return gens;
}

Ideal saturate(const Ideal& ideal, const Monomial& u) {
    if (ideal.is_zero_ideal()) return Ideal(ideal.ring_ptr(), {});
    if (u.is_one()) return ideal;
    if (ideal.ring().order() == MonomialOrder::degrevlex() && is_homogeneous(ideal)) {
        std::vector<int> vars;
        for (auto& [v, e] : u.exps()) vars.push_back(v);
        auto gens = graded_saturation_loop(ideal.gens(), vars, {});
        for (auto& g : gens)
            g = QPoly::from_terms({g.terms().begin(), g.terms().end()}, ideal.ring().order());
        return Ideal(ideal.ring_ptr(), std::move(gens));
    }
    return saturate_extra_variable(ideal, u);
}

Ideal colon(const Ideal& ideal, const Monomial& u) {
    auto base = ideal.ring_ptr();
    if (u.is_one()) return ideal;
    Ideal principal(base, {QPoly::from_sorted({{u, Rational(1)}})});
    Ideal meet = intersect(ideal, principal);
    std::vector<QPoly> divided;
    for (const auto& g : meet.groebner()) {
        std::vector<Term<Rational>> ts;
        for (const auto& t : g.terms()) ts.push_back({t.mono / u, t.coeff});
        divided.push_back(QPoly::from_terms(std::move(ts), base->order()));
    }
    return Ideal(base, std::move(divided));
}

namespace {

// Largest subset of variables containing no leading-monomial support,
// by branch-and-bound over covers.
int max_independent(const std::vector<std::vector<int>>& supports, int nvars) {
    std::vector<char> removed(nvars, 0);
    int best = -1;
    int removed_count = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (nvars - removed_count <= best) return;  // cannot beat best
        std::size_t pick = supports.size();
        for (std::size_t s = from; s < supports.size(); ++s) {
            bool hit = false;
            for (int v : supports[s])
                if (removed[v]) {
                    hit = true;
                    break;
                }
            if (!hit) {
                pick = s;
                break;
            }
        }
        if (pick == supports.size()) {
            best = std::max(best, nvars - removed_count);
            return;
        }
        for (int v : supports[pick]) {
            removed[v] = 1;
            ++removed_count;
            self(self, pick + 1);
            removed[v] = 0;
            --removed_count;
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace

int krull_dimension(const Ideal& ideal) {
    if (ideal.is_unit_ideal()) throw input_error("dimension of the unit ideal is undefined");
    const auto& gb = ideal.groebner();
    if (gb.empty()) return ideal.ring().size();

    std::vector<std::vector<int>> supports;
    for (const auto& g : gb) {
        std::vector<int> s;
        for (auto& [v, e] : g.lm().exps()) s.push_back(v);
        supports.push_back(std::move(s));
    }
    std::sort(supports.begin(), supports.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    // Keep only inclusion-minimal supports.
    std::vector<std::vector<int>> minimal;
    for (const auto& s : supports) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (std::includes(s.begin(), s.end(), m.begin(), m.end())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(s);
    }
    return max_independent(minimal, ideal.ring().size());
}

int height(const Ideal& ideal) { return ideal.ring().size() - krull_dimension(ideal); }

bool squarefree_initial_witness(const Ideal& ideal) {
    for (const auto& g : ideal.groebner())
        if (!g.lm().squarefree()) return false;
    return true;
}

bool is_homogeneous(const Ideal& ideal) {
    for (const auto& g : ideal.gens())
        if (!g.is_zero() && !g.is_homogeneous()) return false;
    return true;
}

}  // namespace polyo
