#pragma once

#include "polyo/field.hpp"
#include "polyo/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace polyo {

// Sparse monomial: (variable index, exponent) pairs, ascending index, no
// zero exponents.  The support mask gives a cheap divisibility pre-filter.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> exps);
    static Monomial variable(int index, int exp = 1);

    const std::vector<std::pair<int, int>>& exps() const { return e_; }
    int degree() const { return deg_; }
    bool is_one() const { return e_.empty(); }
    int exponent(int var) const;
    std::uint64_t mask() const { return mask_; }
    bool squarefree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Quotient a / b; valid only when divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool divides(const Monomial& a, const Monomial& b);  // a | b
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::pair<int, int>> e_;
    int deg_ = 0;
    std::uint64_t mask_ = 0;
    void finish();
};

// Total order on monomials: -1, 0, +1 for a < b, a == b, a > b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

template <class K>
struct Term {
    Monomial mono;
    K coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Terms sorted descending under the ambient order; no zero coefficients.
template <class K>
class Poly {
  public:
    Poly() = default;

    static Poly from_terms(std::vector<Term<K>> ts, const MonomialOrder& order) {
        Poly p;
        p.terms_ = std::move(ts);
        p.normalize(order);
        return p;
    }
    // Caller guarantees descending order, combined monomials, no zeros.
    static Poly from_sorted(std::vector<Term<K>> ts) {
        Poly p;
        p.terms_ = std::move(ts);
        return p;
    }

    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term<K>& leading() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().mono; }
    const K& lc() const { return terms_.front().coeff; }

    // Two terms with coefficients +1 and -1, in either position.
    bool is_pure_difference_binomial() const {
        if (terms_.size() != 2) return false;
        return (is_one(terms_[0].coeff) && is_one(-terms_[1].coeff)) ||
               (is_one(-terms_[0].coeff) && is_one(terms_[1].coeff));
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    void make_monic() {
        if (is_zero() || is_one(lc())) return;
        K inv = K(1) / terms_.front().coeff;
        for (auto& t : terms_) t.coeff = t.coeff * inv;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

  private:
    void normalize(const MonomialOrder& order) {
        std::sort(terms_.begin(), terms_.end(), [&](const Term<K>& a, const Term<K>& b) {
            return compare(a.mono, b.mono, order) > 0;
        });
        std::vector<Term<K>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (polyo::is_zero(t.coeff)) continue;
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff = out.back().coeff + t.coeff;
                if (polyo::is_zero(out.back().coeff)) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    std::vector<Term<K>> terms_;
};

template <class K>
Poly<K> add(const Poly<K>& a, const Poly<K>& b, const MonomialOrder& order) {
    std::vector<Term<K>> out;
    out.reserve(a.size() + b.size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
        int c = compare(ia->mono, ib->mono, order);
        if (c > 0)
            out.push_back(*ia++);
        else if (c < 0)
            out.push_back(*ib++);
        else {
            K s = ia->coeff + ib->coeff;
            if (!is_zero(s)) out.push_back({ia->mono, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return Poly<K>::from_sorted(std::move(out));
}

// t * a; monomial multiplication preserves the term order.
template <class K>
Poly<K> scale(const Poly<K>& a, const Term<K>& t) {
    std::vector<Term<K>> out;
    out.reserve(a.size());
    for (const auto& s : a.terms()) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Poly<K>::from_sorted(std::move(out));
}

template <class K>
Poly<K> subtract_scaled(const Poly<K>& a, const Poly<K>& b, const Term<K>& t,
                        const MonomialOrder& order) {
    return add(a, scale(b, Term<K>{t.mono, -t.coeff}), order);
}

template <class K>
Poly<K> multiply(const Poly<K>& a, const Poly<K>& b, const MonomialOrder& order) {
    std::vector<Term<K>> out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Poly<K>::from_terms(std::move(out), order);
}

using QPoly = Poly<Rational>;

// Text form: "x_2_1*x_4_2 - x_2_2*x_4_1"; parse is its exact inverse.
std::string to_string(const QPoly& p, const Ring& ring);
QPoly parse_poly(const std::string& text, const Ring& ring);

QPoly poly_one();
QPoly poly_variable(int index);
QPoly pure_difference(const Monomial& plus, const Monomial& minus, const MonomialOrder& order);

// Re-index a polynomial into a ring that contains the source variables at
// offset `shift` (shift > 0 extends, shift < 0 restricts; restriction
// requires every index to stay nonnegative).
QPoly shift_vars(const QPoly& p, int shift, const MonomialOrder& target_order);

Poly<GF32003> to_gf(const QPoly& p, const MonomialOrder& order);

}  // namespace polyo
