#include "wallcert/homology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace wallcert {

std::string HomologyGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (rank == 1) { os << "Z"; first = false; }
    else if (rank > 1) { os << "Z^" << rank; first = false; }
    for (long t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string HomologyProfile::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k) os << ", ";
        os << "H" << k << "=" << h[k].str();
    }
    return os.str();
}

SnfResult smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    SnfResult res;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (true) {
        // Find a pivot at or beyond (t, t): smallest nonzero magnitude.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (sgn(m[i][j]) == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                    if (best == 1) goto have_pivot;
                }
            }
    have_pivot:
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m[i][t]) == 0) continue;
                mpz_class q = m[i][t] / m[t][t];  // truncated division is fine here
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (sgn(m[i][t]) != 0) {
                    // remainder smaller than pivot: swap up and restart row pass
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m[t][j]) == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (sgn(m[t][j]) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        ++t;
        if (t >= rows || t >= cols) break;
    }
    res.rank = static_cast<long>(t);
    for (std::size_t i = 0; i < t; ++i) res.diag.push_back(abs(m[i][i]));
    // Enforce the divisibility chain d_i | d_{i+1}.
    for (std::size_t i = 0; i + 1 < res.diag.size(); ++i)
        for (std::size_t j = i + 1; j < res.diag.size(); ++j) {
            if (sgn(res.diag[i]) == 0) std::swap(res.diag[i], res.diag[j]);
            if (sgn(res.diag[j]) == 0) continue;
            if (res.diag[j] % res.diag[i] != 0) {
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), res.diag[i].get_mpz_t(), res.diag[j].get_mpz_t());
                l = res.diag[i] / g * res.diag[j];
                res.diag[i] = g;
                res.diag[j] = l;
            }
        }
    return res;
}

namespace {

std::vector<std::vector<mpz_class>> boundary_matrix(const SimplicialComplex& c, int k) {
    // rows: (k-1)-faces, cols: k-faces
    const auto& lo = c.faces(k - 1);
    const auto& hi = c.faces(k);
    std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
    for (std::size_t i = 0; i < lo.size(); ++i) row_of.emplace(lo[i], i);
    std::vector<std::vector<mpz_class>> m(lo.size(), std::vector<mpz_class>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
        const Simplex& s = hi[j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            m[row_of.at(sub)][j] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<long> small_torsion(const SnfResult& snf) {
    std::vector<long> t;
    for (const auto& d : snf.diag)
        if (d > 1) t.push_back(d.get_si());
    return t;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& c) {
    HomologyProfile out;
    std::array<SnfResult, 5> snf;  // snf[k] for boundary_k, k = 1..4
    for (int k = 1; k <= std::min(c.dimension() + 1, 4); ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(boundary_matrix(c, k));
    for (int k = 0; k <= 3; ++k) {
        long nk = static_cast<long>(c.faces(k).size());
        if (nk == 0) continue;
        long rank_dk = (k >= 1) ? snf[static_cast<std::size_t>(k)].rank : 0;
        long rank_dk1 = (k + 1 <= 4) ? snf[static_cast<std::size_t>(k + 1)].rank : 0;
        out.h[static_cast<std::size_t>(k)].rank = nk - rank_dk - rank_dk1;
        out.h[static_cast<std::size_t>(k)].torsion =
            small_torsion(snf[static_cast<std::size_t>(k + 1)]);
    }
    return out;
}

namespace {

std::vector<std::vector<mpz_class>> coboundary_matrix(const SimplicialComplex& c, int k) {
    // rows: (k+1)-faces, cols: k-faces; entry = coefficient of the coface.
    const auto& lo = c.faces(k);
    const auto& hi = c.faces(k + 1);
    std::unordered_map<Simplex, std::size_t, SimplexHash> col_of;
    for (std::size_t i = 0; i < lo.size(); ++i) col_of.emplace(lo[i], i);
    std::vector<std::vector<mpz_class>> m(hi.size(), std::vector<mpz_class>(lo.size(), 0));
    for (std::size_t r = 0; r < hi.size(); ++r) {
        const Simplex& s = hi[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            m[r][col_of.at(sub)] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

HomologyProfile cohomology(const SimplicialComplex& c) {
    // H^k = ker(delta_k) / im(delta_{k-1}); torsion of H^k comes from the
    // Smith form of delta_{k-1}.
    HomologyProfile out;
    std::array<SnfResult, 5> snf;  // snf[k] for delta_k : C^k -> C^{k+1}
    for (int k = 0; k <= std::min(c.dimension(), 3); ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(coboundary_matrix(c, k));
    for (int k = 0; k <= 3; ++k) {
        long nk = static_cast<long>(c.faces(k).size());
        if (nk == 0) continue;
        long rank_dk = (k <= c.dimension()) ? snf[static_cast<std::size_t>(k)].rank : 0;
        long rank_dkm1 = (k >= 1) ? snf[static_cast<std::size_t>(k - 1)].rank : 0;
        out.h[static_cast<std::size_t>(k)].rank = nk - rank_dk - rank_dkm1;
        if (k >= 1)
            out.h[static_cast<std::size_t>(k)].torsion =
                small_torsion(snf[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

}  // namespace wallcert
