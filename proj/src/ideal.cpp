#include "polyo/ideal.hpp"

#include <algorithm>

namespace polyo {

Ideal::Ideal(std::shared_ptr<const Ring> ring, std::vector<QPoly> gens)
    : ring_(std::move(ring)), state_(std::make_shared<State>()) {
    state_->gens = std::move(gens);
}

Ideal Ideal::with_known_basis(std::shared_ptr<const Ring> ring, std::vector<QPoly> gb) {
    Ideal i(std::move(ring), gb);
    i.state_->gb = std::move(gb);
    i.state_->gb_known = true;
    return i;
}

const std::vector<QPoly>& Ideal::groebner() const {
    if (state_->gb_known) return state_->gb;
    std::call_once(state_->once, [this] {
        state_->gb = reduced_groebner_basis(state_->gens, ring_->order());
        state_->gb_known = true;
    });
    return state_->gb;
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().lm().is_one();
}

QPoly normal_form(const QPoly& f, const Ideal& ideal) {
    return normal_form(f, ideal.groebner(), ideal.ring().order());
}

bool member(const QPoly& f, const Ideal& ideal) { return normal_form(f, ideal).is_zero(); }

bool contains(const Ideal& outer, const Ideal& inner) {
    if (!outer.ring().same_vars(inner.ring()))
        throw input_error("ideal containment across different variable tables");
    for (const auto& g : inner.gens())
        if (!member(g, outer)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!(a.ring() == b.ring())) throw input_error("ideal equality across different rings");
    return a.groebner() == b.groebner();
}

QPoly inner_minor(const Interval& iv, const Ring& ring) {
    int a = ring.index_of_vertex(iv.ll);
    int b = ring.index_of_vertex(iv.ur);
    int c = ring.index_of_vertex(iv.ul());
    int d = ring.index_of_vertex(iv.lr());
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw input_error("ring lacks a corner variable of " + to_string(iv));
    return pure_difference(Monomial({{a, 1}, {b, 1}}), Monomial({{c, 1}, {d, 1}}), ring.order());
}

Ideal ideal_of(const Polyocollection& c) {
    return ideal_of(c, Ring::vertex_ring(c.vertices()));
}

Ideal ideal_of(const Polyocollection& c, std::shared_ptr<const Ring> ring) {
    std::vector<QPoly> gens;
    for (const auto& iv : inner_intervals(c)) gens.push_back(inner_minor(iv, *ring));
    return Ideal(std::move(ring), std::move(gens));
}

}  // namespace polyo
