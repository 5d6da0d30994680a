#pragma once

#include "polyo/geometry.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace polyo {

// A ring variable: either the vertex variable of a lattice point or a named
// auxiliary (tag, saturation, toric target).
struct VarId {
    std::variant<Point, std::string> id;

    static VarId vertex(Point p) { return {p}; }
    static VarId aux(std::string name) { return {std::move(name)}; }

    bool is_vertex() const { return std::holds_alternative<Point>(id); }
    Point point() const { return std::get<Point>(id); }
    const std::string& aux_name() const { return std::get<std::string>(id); }

    // Printable name; vertex (i,j) prints as x_i_j.
    std::string name() const;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Elim };
    Kind kind = Kind::Degrevlex;
    // For Elim: variables [0, elim_count) form the leading block; both blocks
    // are compared by degrevlex, block by block (a product order, so the
    // basis elements free of the leading block generate the elimination
    // ideal).
    int elim_count = 0;
    // For Degrevlex only: index of a variable demoted to the revlex-cheapest
    // position (a permuted degrevlex; used by the homogeneous saturation
    // loop).  -1 keeps the natural sequence.
    int cheapest = -1;
    // For Degrevlex only: positive per-variable weights replacing the total
    // degree (empty = all ones).  Weighted saturation of toric graph lattices
    // needs these, since their binomials are homogeneous only under the map's
    // degrees.
    std::vector<int> weights;

    static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0, -1, {}}; }
    static MonomialOrder degrevlex_cheapest(int var, std::vector<int> w = {}) {
        return {Kind::Degrevlex, 0, var, std::move(w)};
    }
    static MonomialOrder lex() { return {Kind::Lex, 0, -1, {}}; }
    static MonomialOrder elim(int leading_block) { return {Kind::Elim, leading_block, -1, {}}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string to_string(const MonomialOrder& order);

// Variable table plus monomial order.  Index 0 is the largest variable.
// Vertex rings list their variables in (x, y)-lexicographic point order;
// elimination rings prepend auxiliaries so the leading block eliminates them.
class Ring {
  public:
    Ring(std::vector<VarId> vars, MonomialOrder order);

    // Canonical polynomial ring of a vertex set under degrevlex.
    static std::shared_ptr<const Ring> vertex_ring(std::vector<Point> points,
                                                   MonomialOrder order = MonomialOrder::degrevlex());
    // Auxiliaries first, then the variables of `base`, under an elimination
    // order whose leading block is exactly the auxiliaries.
    static std::shared_ptr<const Ring> extend_front(const std::vector<std::string>& aux,
                                                    const Ring& base);

    int size() const { return (int)vars_.size(); }
    const std::vector<VarId>& vars() const { return vars_; }
    const VarId& var(int i) const { return vars_[i]; }
    std::string var_name(int i) const { return vars_[i].name(); }
    const MonomialOrder& order() const { return order_; }

    int index_of(const VarId& v) const;         // -1 if absent
    int index_of_vertex(Point p) const { return index_of(VarId::vertex(p)); }
    bool has(const VarId& v) const { return index_of(v) >= 0; }

    // Same variable table (order may differ).
    bool same_vars(const Ring& other) const { return vars_ == other.vars_; }

    friend bool operator==(const Ring&, const Ring&) = default;

  private:
    std::vector<VarId> vars_;
    MonomialOrder order_;
    std::map<VarId, int> index_;
};

}  // namespace polyo
