#include "polyo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyo {

void Monomial::finish() {
    deg_ = 0;
    mask_ = 0;
    for (auto& [v, e] : e_) {
        deg_ += e;
        mask_ |= std::uint64_t(1) << (v & 63);
    }
}

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : e_(std::move(exps)) {
    std::sort(e_.begin(), e_.end());
    std::vector<std::pair<int, int>> out;
    for (auto& [v, e] : e_) {
        if (e == 0) continue;
        if (e < 0) throw input_error("negative exponent");
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    e_ = std::move(out);
    finish();
}

Monomial Monomial::variable(int index, int exp) { return Monomial({{index, exp}}); }

int Monomial::exponent(int var) const {
    for (auto& [v, e] : e_)
        if (v == var) return e;
    return 0;
}

bool Monomial::squarefree() const {
    for (auto& [v, e] : e_)
        if (e > 1) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.reserve(a.e_.size() + b.e_.size());
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            r.e_.push_back(*ia++);
        else if (ib->first < ia->first)
            r.e_.push_back(*ib++);
        else {
            r.e_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    r.e_.insert(r.e_.end(), ia, a.e_.end());
    r.e_.insert(r.e_.end(), ib, b.e_.end());
    r.finish();
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & ~b.mask_) != 0) return false;
    if (a.deg_ > b.deg_) return false;
    auto ib = b.e_.begin();
    for (auto& [v, e] : a.e_) {
        while (ib != b.e_.end() && ib->first < v) ++ib;
        if (ib == b.e_.end() || ib->first != v || ib->second < e) return false;
    }
    return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ib = b.e_.begin();
    for (auto& [v, e] : a.e_) {
        int sub = 0;
        while (ib != b.e_.end() && ib->first < v) ++ib;
        if (ib != b.e_.end() && ib->first == v) sub = ib->second;
        if (e - sub < 0) throw input_error("monomial division not exact");
        if (e - sub > 0) r.e_.emplace_back(v, e - sub);
    }
    r.finish();
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            r.e_.push_back(*ia++);
        else if (ib->first < ia->first)
            r.e_.push_back(*ib++);
        else {
            r.e_.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    r.e_.insert(r.e_.end(), ia, a.e_.end());
    r.e_.insert(r.e_.end(), ib, b.e_.end());
    r.finish();
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            r.e_.emplace_back(ia->first, std::min(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    r.finish();
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & b.mask_) == 0) return true;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else
            return false;
    }
    return true;
}

namespace {

// Degrevlex on exponents restricted to variable indices in [lo, hi),
// with an optional variable demoted to the very last revlex position and
// optional positive variable weights for the degree comparison.
int cmp_degrevlex_block(const Monomial& a, const Monomial& b, int lo, int hi, int cheapest = -1,
                        const std::vector<int>* weights = nullptr) {
    long long da = 0, db = 0;
    for (auto& [v, e] : a.exps())
        if (v >= lo && v < hi) da += (long long)e * (weights ? (*weights)[v] : 1);
    for (auto& [v, e] : b.exps())
        if (v >= lo && v < hi) db += (long long)e * (weights ? (*weights)[v] : 1);
    if (da != db) return da < db ? -1 : 1;
    if (cheapest >= 0) {
        int ca = a.exponent(cheapest), cb = b.exponent(cheapest);
        if (ca != cb) return ca > cb ? -1 : 1;
    }
    // Reverse lexicographic tie-break: scan from the last variable; the
    // first difference decides, smaller exponent wins.
    auto skip = [&](auto& it, auto end) {
        while (it != end && (it->first < lo || it->first >= hi || it->first == cheapest)) ++it;
    };
    auto ia = a.exps().rbegin(), ea = a.exps().rend();
    auto ib = b.exps().rbegin(), eb = b.exps().rend();
    skip(ia, ea);
    skip(ib, eb);
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first) {
            // the monomial owning the later variable has a positive exponent
            // there where the other has zero -> it is smaller
            return ia->first > ib->first ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
        skip(ia, ea);
        skip(ib, eb);
    }
    if (ia != ea) return -1;  // a has an extra trailing variable
    if (ib != eb) return 1;
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    auto ia = a.exps().begin(), ea = a.exps().end();
    auto ib = b.exps().begin(), eb = b.exps().end();
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    switch (order.kind) {
        case MonomialOrder::Kind::Lex: return cmp_lex(a, b);
        case MonomialOrder::Kind::Degrevlex:
            return cmp_degrevlex_block(a, b, 0, 1 << 30, order.cheapest,
                                       order.weights.empty() ? nullptr : &order.weights);
        case MonomialOrder::Kind::Elim: {
            int c = cmp_degrevlex_block(a, b, 0, order.elim_count);
            if (c != 0) return c;
            return cmp_degrevlex_block(a, b, order.elim_count, 1 << 30);
        }
    }
    return 0;
}

QPoly poly_one() { return QPoly::from_sorted({{Monomial(), Rational(1)}}); }

QPoly poly_variable(int index) {
    return QPoly::from_sorted({{Monomial::variable(index), Rational(1)}});
}

QPoly pure_difference(const Monomial& plus, const Monomial& minus, const MonomialOrder& order) {
    return QPoly::from_terms({{plus, Rational(1)}, {minus, Rational(-1)}}, order);
}

std::string to_string(const QPoly& p, const Ring& ring) {
    if (p.is_zero()) return "0";
    // Display order is lex, independent of the active computation order, so
    // serialized text is stable across order flags (diagonal products of
    // 2-minors come first).
    std::vector<Term<Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Term<Rational>& a, const Term<Rational>& b) {
        return compare(a.mono, b.mono, MonomialOrder::lex()) > 0;
    });
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rational c = t.coeff;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += coeff_to_string(c);
            continue;
        }
        if (!is_one(c)) out += coeff_to_string(c) + "*";
        bool first_factor = true;
        for (auto& [v, e] : t.mono.exps()) {
            if (!first_factor) out += "*";
            first_factor = false;
            out += ring.var_name(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

Term<Rational> parse_term(const std::string& tok, const Ring& ring) {
    // factors separated by '*'; optional leading rational
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : tok) {
        if (ch == '*') {
            factors.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    factors.push_back(cur);
    Rational coeff(1);
    std::vector<std::pair<int, int>> exps;
    for (const auto& f : factors) {
        if (f.empty()) throw input_error("empty factor in term '" + tok + "'");
        if (std::isdigit((unsigned char)f[0])) {
            coeff *= rational_from_string(f);
            continue;
        }
        std::string name = f;
        int exp = 1;
        if (auto pos = f.find('^'); pos != std::string::npos) {
            name = f.substr(0, pos);
            exp = std::stoi(f.substr(pos + 1));
        }
        int idx = -1;
        for (int i = 0; i < ring.size(); ++i)
            if (ring.var_name(i) == name) {
                idx = i;
                break;
            }
        if (idx < 0) throw input_error("unknown variable '" + name + "'");
        exps.emplace_back(idx, exp);
    }
    return {Monomial(std::move(exps)), coeff};
}

}  // namespace

QPoly parse_poly(const std::string& text, const Ring& ring) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Term<Rational>> terms;
    int sign = 1;
    bool expect_term = true;
    while (in >> tok) {
        if (tok == "+") {
            sign = 1;
            expect_term = true;
            continue;
        }
        if (tok == "-") {
            sign = -1;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw input_error("missing operator in polynomial text");
        if (tok[0] == '-') {
            sign = -sign;
            tok = tok.substr(1);
        }
        if (tok == "0") {
            expect_term = false;
            sign = 1;
            continue;
        }
        auto t = parse_term(tok, ring);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        sign = 1;
        expect_term = false;
    }
    return QPoly::from_terms(std::move(terms), ring.order());
}

QPoly shift_vars(const QPoly& p, int shift, const MonomialOrder& target_order) {
    std::vector<Term<Rational>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<std::pair<int, int>> exps;
        exps.reserve(t.mono.exps().size());
        for (auto& [v, e] : t.mono.exps()) {
            if (v + shift < 0) throw input_error("variable index underflow in shift_vars");
            exps.emplace_back(v + shift, e);
        }
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return QPoly::from_terms(std::move(out), target_order);
}

Poly<GF32003> to_gf(const QPoly& p, const MonomialOrder& order) {
    std::vector<Term<GF32003>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({t.mono, GF32003::from_rational(t.coeff)});
    return Poly<GF32003>::from_terms(std::move(out), order);
}

}  // namespace polyo
