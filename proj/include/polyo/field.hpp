#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyo {

// Authoritative coefficient field: arbitrary-precision rationals.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline std::string coeff_to_string(const Rational& q) { return q.get_str(); }
inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// Prime field used as a fast probabilistic pre-check, never for verdicts.
struct GF32003 {
    static constexpr std::uint32_t P = 32003;
    std::uint32_t v = 0;

    GF32003() = default;
    explicit GF32003(long x) {
        long m = x % (long)P;
        v = (std::uint32_t)(m < 0 ? m + P : m);
    }
    static GF32003 from_rational(const Rational& q) {
        mpz_class num = q.get_num(), den = q.get_den();
        GF32003 n((long)mpz_fdiv_ui(num.get_mpz_t(), P));
        GF32003 d((long)mpz_fdiv_ui(den.get_mpz_t(), P));
        return n / d;
    }

    friend GF32003 operator+(GF32003 a, GF32003 b) { return GF32003((long)((a.v + b.v) % P)); }
    friend GF32003 operator-(GF32003 a, GF32003 b) { return GF32003((long)((a.v + P - b.v) % P)); }
    friend GF32003 operator*(GF32003 a, GF32003 b) {
        return GF32003((long)(((std::uint64_t)a.v * b.v) % P));
    }
    GF32003 inverse() const {
        // Fermat: v^(P-2)
        std::uint64_t base = v, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return GF32003((long)acc);
    }
    friend GF32003 operator/(GF32003 a, GF32003 b) { return a * b.inverse(); }
    GF32003 operator-() const { return GF32003((long)(P - v) % (long)P); }
    friend bool operator==(GF32003, GF32003) = default;
};

inline bool is_zero(GF32003 a) { return a.v == 0; }
inline bool is_one(GF32003 a) { return a.v == 1; }
inline std::string coeff_to_string(GF32003 a) { return std::to_string(a.v); }

}  // namespace polyo
