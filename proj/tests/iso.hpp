#pragma once

// Exact simplicial-complex isomorphism search (test oracle). Backtracking on
// the 1-skeleton in most-constrained-first order, then full face-set
// verification; backtracks on face mismatch, so it is sound for arbitrary
// complexes, not only flag ones.

#include <algorithm>
#include <vector>

#include "wallcert/complex.hpp"

namespace wallcert_test {

inline bool faces_match(const wallcert::SimplicialComplex& a,
                        const wallcert::SimplicialComplex& b,
                        const std::vector<int>& map_ab) {
    for (int d = 0; d <= a.dimension(); ++d) {
        for (const auto& f : a.faces(d)) {
            wallcert::Simplex g;
            g.reserve(f.size());
            for (int v : f) g.push_back(map_ab[static_cast<std::size_t>(v)]);
            std::sort(g.begin(), g.end());
            if (!b.has_face(g)) return false;
        }
    }
    return true;
}

inline bool extend(const wallcert::SimplicialComplex& a, const wallcert::SimplicialComplex& b,
                   const std::vector<int>& order, std::size_t pos, std::vector<int>& map_ab,
                   std::vector<char>& used) {
    if (pos == order.size()) return faces_match(a, b, map_ab);
    int u = order[pos];
    const auto& nb_u = a.neighbors(u);
    for (int cand = 0; cand < b.num_vertices(); ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (b.neighbors(cand).size() != nb_u.size()) continue;
        bool ok = true;
        for (int w : nb_u) {
            int im = map_ab[static_cast<std::size_t>(w)];
            if (im >= 0 && !b.adjacent(cand, im)) { ok = false; break; }
        }
        if (ok) {
            // non-neighbors already mapped must stay non-adjacent
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int w = order[q];
                if (!a.adjacent(u, w) && b.adjacent(cand, map_ab[static_cast<std::size_t>(w)]))
                    ok = false;
            }
        }
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(u)] = cand;
        used[static_cast<std::size_t>(cand)] = 1;
        if (extend(a, b, order, pos + 1, map_ab, used)) return true;
        map_ab[static_cast<std::size_t>(u)] = -1;
        used[static_cast<std::size_t>(cand)] = 0;
    }
    return false;
}

inline bool complexes_isomorphic(const wallcert::SimplicialComplex& a,
                                 const wallcert::SimplicialComplex& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    if (a.f_vector() != b.f_vector()) return false;
    // BFS-ish order: every vertex after the first has a previously mapped
    // neighbor where possible, which keeps the branching tiny.
    const int n = a.num_vertices();
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> queue = {s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            order.push_back(u);
            for (int w : a.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
    }
    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    return extend(a, b, order, 0, map_ab, used);
}

}  // namespace wallcert_test
