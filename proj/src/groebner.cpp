#include "polyo/groebner.hpp"

#include <algorithm>
#include <set>

namespace polyo {

namespace {

template <class K>
Poly<K> drop_leading(const Poly<K>& p) {
    std::vector<Term<K>> rest(p.terms().begin() + 1, p.terms().end());
    return Poly<K>::from_sorted(std::move(rest));
}

template <class K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g, const MonomialOrder& order) {
    Monomial l = lcm(f.lm(), g.lm());
    Term<K> tf{l / f.lm(), K(1) / f.lc()};
    Term<K> tg{l / g.lm(), K(1) / g.lc()};
    return add(scale(f, tf), scale(g, Term<K>{tg.mono, -tg.coeff}), order);
}

struct SPair {
    Monomial l;
    int i, j;
};

struct PairQueue {
    const MonomialOrder* order;
    bool operator()(const SPair& a, const SPair& b) const {
        int c = compare(a.l, b.l, *order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& order) {
    std::vector<Term<K>> remainder;
    Poly<K> h = f;
    while (!h.is_zero()) {
        const auto& lt = h.leading();
        const Poly<K>* divisor = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if ((g.lm().mask() & ~lt.mono.mask()) != 0) continue;
            if (divides(g.lm(), lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Term<K> q{lt.mono / divisor->lm(), lt.coeff / divisor->lc()};
            h = subtract_scaled(h, *divisor, q, order);
        } else {
            remainder.push_back(lt);
            h = drop_leading(h);
        }
    }
    return Poly<K>::from_sorted(std::move(remainder));
}

template <class K>
std::vector<Poly<K>> reduced_groebner_basis(std::vector<Poly<K>> gens, const MonomialOrder& order) {
    std::vector<Poly<K>> basis;
    std::set<SPair, PairQueue> pairs(PairQueue{&order});

    auto add_element = [&](Poly<K> h) {
        h.make_monic();
        const int t = (int)basis.size();
        const Monomial& lmh = h.lm();

        // Gebauer-Moeller update.  Candidate pairs with the newcomer first:
        // keep only minimal lcms (M), one representative per equal lcm (F),
        // then drop coprime leading terms (B).
        std::vector<SPair> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i) cand.push_back({lcm(basis[i].lm(), lmh), i, t});
        std::vector<bool> dead(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[a] || dead[b]) continue;
                if (cand[b].l == cand[a].l && b < a) continue;  // F handled below
                if (!(cand[b].l == cand[a].l) && divides(cand[b].l, cand[a].l)) dead[a] = true;
            }
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (!dead[a] && !dead[b] && cand[a].l == cand[b].l) dead[a] = true;
        // Chain criterion against pairs already queued.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const SPair& p = *it;
            if (divides(lmh, p.l) && !(lcm(basis[p.i].lm(), lmh) == p.l) &&
                !(lcm(basis[p.j].lm(), lmh) == p.l))
                it = pairs.erase(it);
            else
                ++it;
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            if (coprime(basis[cand[a].i].lm(), lmh)) continue;
            pairs.insert(cand[a]);
        }
        basis.push_back(std::move(h));
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        // Inputs may arrive sorted under another order; re-normalize first.
        auto sorted = Poly<K>::from_terms({g.terms().begin(), g.terms().end()}, order);
        auto r = normal_form(sorted, basis, order);
        if (!r.is_zero()) add_element(std::move(r));
    }
    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        auto r = normal_form(spoly(basis[p.i], basis[p.j], order), basis, order);
        if (!r.is_zero()) add_element(std::move(r));
    }

    // Minimalize, then inter-reduce.
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[a] || !keep[b]) continue;
            if (basis[b].lm() == basis[a].lm()) {
                if (b < a) keep[a] = 0;
            } else if (divides(basis[b].lm(), basis[a].lm())) {
                keep[a] = 0;
            }
        }
    std::vector<Poly<K>> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) minimal.push_back(std::move(basis[a]));

    std::vector<Poly<K>> reduced = minimal;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Poly<K>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced[a] = normal_form(minimal[a], others, order);
        reduced[a].make_monic();
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& x, const Poly<K>& y) {
        return compare(x.lm(), y.lm(), order) < 0;
    });
    return reduced;
}

template <class K>
bool is_groebner_basis(const std::vector<Poly<K>>& basis, const MonomialOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (coprime(basis[i].lm(), basis[j].lm())) continue;
            if (!normal_form(spoly(basis[i], basis[j], order), basis, order).is_zero()) return false;
        }
    return true;
}

template Poly<Rational> normal_form(const Poly<Rational>&, const std::vector<Poly<Rational>>&,
                                    const MonomialOrder&);
template std::vector<Poly<Rational>> reduced_groebner_basis(std::vector<Poly<Rational>>,
                                                            const MonomialOrder&);
template bool is_groebner_basis(const std::vector<Poly<Rational>>&, const MonomialOrder&);

template Poly<GF32003> normal_form(const Poly<GF32003>&, const std::vector<Poly<GF32003>>&,
                                   const MonomialOrder&);
template std::vector<Poly<GF32003>> reduced_groebner_basis(std::vector<Poly<GF32003>>,
                                                           const MonomialOrder&);
template bool is_groebner_basis(const std::vector<Poly<GF32003>>&, const MonomialOrder&);

}  // namespace polyo
