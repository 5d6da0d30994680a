#include "polyo/ring.hpp"

#include <algorithm>

namespace polyo {

std::string VarId::name() const {
    if (is_vertex()) {
        Point p = point();
        return "x_" + std::to_string(p.x) + "_" + std::to_string(p.y);
    }
    return aux_name();
}

std::string to_string(const MonomialOrder& order) {
    switch (order.kind) {
        case MonomialOrder::Kind::Degrevlex: return "degrevlex";
        case MonomialOrder::Kind::Lex: return "lex";
        case MonomialOrder::Kind::Elim: return "elim(" + std::to_string(order.elim_count) + ")";
    }
    return "?";
}

Ring::Ring(std::vector<VarId> vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {
    for (int i = 0; i < (int)vars_.size(); ++i) {
        auto [it, fresh] = index_.emplace(vars_[i], i);
        if (!fresh) throw input_error("duplicate ring variable " + vars_[i].name());
    }
}

std::shared_ptr<const Ring> Ring::vertex_ring(std::vector<Point> points, MonomialOrder order) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<VarId> vars;
    vars.reserve(points.size());
    for (Point p : points) vars.push_back(VarId::vertex(p));
    return std::make_shared<Ring>(std::move(vars), order);
}

std::shared_ptr<const Ring> Ring::extend_front(const std::vector<std::string>& aux, const Ring& base) {
    std::vector<VarId> vars;
    vars.reserve(aux.size() + base.size());
    for (const auto& name : aux) vars.push_back(VarId::aux(name));
    for (const auto& v : base.vars()) vars.push_back(v);
    return std::make_shared<Ring>(std::move(vars), MonomialOrder::elim((int)aux.size()));
}

int Ring::index_of(const VarId& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace polyo
