#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "wallcert/complex.hpp"

namespace wallcert {

struct HomologyGroup {
    long rank = 0;
    std::vector<long> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) { return !(a == b); }
    std::string str() const;  // e.g. "Z^2 + Z/2"
};

/// Integral (co)homology in degrees 0..3.
struct HomologyProfile {
    std::array<HomologyGroup, 4> h;

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.h == b.h;
    }
    friend bool operator!=(const HomologyProfile& a, const HomologyProfile& b) { return !(a == b); }
    std::string str() const;
};

/// Simplicial homology from boundary matrices and Smith normal form over
/// unbounded integers.
HomologyProfile homology(const SimplicialComplex& c);

/// Integral cohomology H^k computed from explicitly built coboundary
/// matrices. Kept independent of homology() so the two can check each other
/// through universal coefficients.
HomologyProfile cohomology(const SimplicialComplex& c);

/// Integer Smith normal form utility. Returns rank and the nontrivial
/// diagonal entries (absolute values, divisibility chain enforced).
struct SnfResult {
    long rank = 0;
    std::vector<mpz_class> diag;
};
SnfResult smith_normal_form(std::vector<std::vector<mpz_class>> m);

}  // namespace wallcert
