#pragma once

#include <bit>
#include <cstdint>

#include "pwlab/common.hpp"

namespace pwlab {

/// Polynomial over GF(2) with degree < 64, bit i = coefficient of x^i.
struct GF2Poly {
    std::uint64_t bits = 0;

    constexpr GF2Poly() = default;
    constexpr explicit GF2Poly(std::uint64_t b) : bits(b) {}

    bool is_zero() const { return bits == 0; }

    int degree() const {
        if (bits == 0) return -1;
        return 63 - std::countl_zero(bits);
    }

    friend bool operator==(GF2Poly a, GF2Poly b) { return a.bits == b.bits; }
    friend bool operator<(GF2Poly a, GF2Poly b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.bits < b.bits;
    }
    friend GF2Poly operator+(GF2Poly a, GF2Poly b) { return GF2Poly(a.bits ^ b.bits); }
};

inline GF2Poly poly_x() { return GF2Poly(2); }
inline GF2Poly poly_one() { return GF2Poly(1); }

/// x^n + 1 (n <= 63).
inline GF2Poly poly_xn_plus_1(std::size_t n) {
    if (n > 63) throw DimensionGuard("GF2Poly: degree > 63");
    return GF2Poly((std::uint64_t{1} << n) | 1u);
}

inline GF2Poly poly_mul(GF2Poly a, GF2Poly b) {
    if (a.is_zero() || b.is_zero()) return GF2Poly(0);
    if (a.degree() + b.degree() > 63) throw ArithmeticOverflow("poly_mul: degree > 63");
    std::uint64_t r = 0, x = a.bits;
    std::uint64_t y = b.bits;
    while (y) {
        if (y & 1u) r ^= x;
        x <<= 1;
        y >>= 1;
    }
    return GF2Poly(r);
}

struct GF2DivMod {
    GF2Poly quot;
    GF2Poly rem;
};

inline GF2DivMod poly_divmod(GF2Poly a, GF2Poly b) {
    if (b.is_zero()) throw Error("poly_divmod: division by zero");
    std::uint64_t q = 0, r = a.bits;
    int db = b.degree();
    while (r != 0) {
        int dr = 63 - std::countl_zero(r);
        if (dr < db) break;
        q |= std::uint64_t{1} << (dr - db);
        r ^= b.bits << (dr - db);
    }
    return {GF2Poly(q), GF2Poly(r)};
}

inline GF2Poly poly_mod(GF2Poly a, GF2Poly b) { return poly_divmod(a, b).rem; }

inline bool poly_divides(GF2Poly d, GF2Poly a) { return poly_divmod(a, d).rem.is_zero(); }

inline GF2Poly poly_gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

/// Product modulo m, via a 128-bit carryless intermediate.
inline GF2Poly poly_mulmod(GF2Poly a, GF2Poly b, GF2Poly m) {
    unsigned __int128 r = 0;
    unsigned __int128 x = a.bits;
    std::uint64_t y = b.bits;
    while (y) {
        if (y & 1u) r ^= x;
        x <<= 1;
        y >>= 1;
    }
    // reduce
    int dm = m.degree();
    if (dm < 0) throw Error("poly_mulmod: zero modulus");
    unsigned __int128 mb = m.bits;
    for (int d = 126; d >= dm; --d) {
        if ((r >> d) & 1) r ^= mb << (d - dm);
    }
    return GF2Poly(static_cast<std::uint64_t>(r));
}

inline GF2Poly poly_sqrmod(GF2Poly a, GF2Poly m) { return poly_mulmod(a, a, m); }

/// x^{deg} * p(1/x): the coefficient-reversed polynomial.
inline GF2Poly poly_reciprocal(GF2Poly p) {
    int d = p.degree();
    if (d < 0) return p;
    std::uint64_t r = 0;
    for (int i = 0; i <= d; ++i)
        if ((p.bits >> i) & 1u) r |= std::uint64_t{1} << (d - i);
    return GF2Poly(r);
}

inline int poly_weight(GF2Poly p) { return std::popcount(p.bits); }

}  // namespace pwlab
