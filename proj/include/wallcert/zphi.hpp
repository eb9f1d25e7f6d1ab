#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wallcert/golden.hpp"

namespace wallcert {

/// Z[phi] element with machine-integer components, used by the certifier's
/// hot loops. Inputs are bound-checked on extraction (|a|, |b| <= 2^16), so
/// the products formed during sweeps stay far inside int64 range; arithmetic
/// is exact throughout.
struct ZPhi {
    std::int64_t a = 0, b = 0;  // a + b*phi

    friend ZPhi operator+(ZPhi x, ZPhi y) { return {x.a + y.a, x.b + y.b}; }
    friend ZPhi operator-(ZPhi x, ZPhi y) { return {x.a - y.a, x.b - y.b}; }
    friend ZPhi operator-(ZPhi x) { return {-x.a, -x.b}; }
    friend ZPhi operator*(ZPhi x, ZPhi y) {
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(ZPhi x, ZPhi y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(ZPhi x, ZPhi y) { return !(x == y); }

    bool is_zero() const { return a == 0 && b == 0; }

    /// Exact sign of a + b*(1+sqrt5)/2.
    int sign() const {
        const std::int64_t u = 2 * a + b, v = b;
        auto sgn64 = [](std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
        int su = sgn64(u), sv = sgn64(v);
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        const __int128 u2 = static_cast<__int128>(u) * u;
        const __int128 v2 = static_cast<__int128>(v) * v * 5;
        if (su > 0) return u2 > v2 ? 1 : -1;
        return u2 < v2 ? 1 : -1;
    }

    Golden to_golden() const { return Golden(mpq_class(static_cast<long>(a)), mpq_class(static_cast<long>(b))); }

    static ZPhi phi() { return {0, 1}; }
    static ZPhi one() { return {1, 0}; }

    /// Extraction with the integrality and magnitude gate.
    static std::optional<ZPhi> from_golden(const Golden& g) {
        if (!g.is_integral()) return std::nullopt;
        const mpz_class& pa = g.unit_part().get_num();
        const mpz_class& qb = g.phi_part().get_num();
        if (!pa.fits_slong_p() || !qb.fits_slong_p()) return std::nullopt;
        long a = pa.get_si(), b = qb.get_si();
        if (a > (1L << 16) || a < -(1L << 16) || b > (1L << 16) || b < -(1L << 16))
            return std::nullopt;
        return ZPhi{a, b};
    }
};

inline ZPhi mul_phi(ZPhi z) { return {z.b, z.a + z.b}; }          // phi * z
inline ZPhi mul_one_plus_phi(ZPhi z) { return z + mul_phi(z); }   // (1+phi) * z

}  // namespace wallcert
