#pragma once

#include "polyo/geometry.hpp"
#include "polyo/groebner.hpp"
#include "polyo/poly.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace polyo {

// An ideal of a fixed ring, over the rationals.  Immutable; the reduced
// Groebner basis is computed once on demand and shared between copies.
class Ideal {
  public:
    Ideal() = default;
    Ideal(std::shared_ptr<const Ring> ring, std::vector<QPoly> gens);

    // For results whose reduced basis is already known (eliminations).
    static Ideal with_known_basis(std::shared_ptr<const Ring> ring, std::vector<QPoly> gb);

    const Ring& ring() const { return *ring_; }
    const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
    const std::vector<QPoly>& gens() const { return state_->gens; }

    // Unique reduced Groebner basis under the ring's order.
    const std::vector<QPoly>& groebner() const;

    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_unit_ideal() const;

  private:
    std::shared_ptr<const Ring> ring_;
    struct State {
        std::vector<QPoly> gens;
        mutable std::once_flag once;
        mutable std::vector<QPoly> gb;
        mutable bool gb_known = false;
    };
    std::shared_ptr<State> state_;
};

QPoly normal_form(const QPoly& f, const Ideal& ideal);
bool member(const QPoly& f, const Ideal& ideal);
// Every generator of inner lies in outer.
bool contains(const Ideal& outer, const Ideal& inner);
// Reduced-basis equality; requires the same ring.
bool ideal_equal(const Ideal& a, const Ideal& b);

// x_a*x_b - x_c*x_d for the diagonal/anti-diagonal corners of an interval.
QPoly inner_minor(const Interval& iv, const Ring& ring);

// The binomial ideal of a polyocollection: one inner 2-minor per inner
// interval, in the canonical vertex ring of V(C).
Ideal ideal_of(const Polyocollection& c);
// Same generators embedded in a caller-supplied ring (which must contain all
// vertices of C).
Ideal ideal_of(const Polyocollection& c, std::shared_ptr<const Ring> ring);

}  // namespace polyo
