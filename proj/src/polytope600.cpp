#include "wallcert/polytope600.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallcert {

namespace {

Golden half() { return Golden::rational(1, 2); }

std::vector<std::array<int, 4>> even_permutations() {
    std::array<int, 4> p = {0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

bool Polytope600::adjacent(int u, int v) const {
    const auto& nb = adjacency[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Golden Polytope600::dot(int u, int v) const {
    Golden s;
    for (int t = 0; t < 4; ++t)
        s += vertices[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)] *
             vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
    return s;
}

Polytope600 generate_600cell() {
    Polytope600 P;
    const Golden one(1), phi = Golden::phi();
    // 8 vertices: +-e_t
    for (int t = 0; t < 4; ++t)
        for (int s = 0; s < 2; ++s) {
            GoldenVector v(4);
            v[static_cast<std::size_t>(t)] = s == 0 ? one : -one;
            P.vertices.push_back(std::move(v));
        }
    // 16 vertices: (+-1/2, +-1/2, +-1/2, +-1/2)
    for (int mask = 0; mask < 16; ++mask) {
        GoldenVector v(4);
        for (int t = 0; t < 4; ++t)
            v[static_cast<std::size_t>(t)] = (mask >> t) & 1 ? -half() : half();
        P.vertices.push_back(std::move(v));
    }
    // 96 vertices: even permutations of (+-phi/2, +-1/2, +-(phi-1)/2, 0)
    const Golden base[3] = {phi * half(), half(), (phi - one) * half()};
    for (const auto& perm : even_permutations())
        for (int mask = 0; mask < 8; ++mask) {
            GoldenVector v(4);
            for (int slot = 0; slot < 4; ++slot) {
                int which = perm[static_cast<std::size_t>(slot)];
                if (which == 3) continue;  // the zero entry
                Golden c = base[which];
                if ((mask >> which) & 1) c = -c;
                v[static_cast<std::size_t>(slot)] = c;
            }
            P.vertices.push_back(std::move(v));
        }
    if (P.vertices.size() != 120)
        throw std::logic_error("600-cell generation: wrong vertex count");
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < P.vertices.size(); ++j)
            if (P.vertices[i] == P.vertices[j])
                throw std::logic_error("600-cell generation: duplicate vertex");

    const Golden edge_dot = phi * half();
    P.adjacency.assign(120, {});
    for (int u = 0; u < 120; ++u)
        for (int v = u + 1; v < 120; ++v)
            if (P.dot(u, v) == edge_dot) {
                P.edges.emplace_back(u, v);
                P.adjacency[static_cast<std::size_t>(u)].push_back(v);
                P.adjacency[static_cast<std::size_t>(v)].push_back(u);
            }
    for (auto& nb : P.adjacency) std::sort(nb.begin(), nb.end());

    for (const auto& [u, v] : P.edges) {
        std::vector<int> common;
        std::set_intersection(P.adjacency[static_cast<std::size_t>(u)].begin(),
                              P.adjacency[static_cast<std::size_t>(u)].end(),
                              P.adjacency[static_cast<std::size_t>(v)].begin(),
                              P.adjacency[static_cast<std::size_t>(v)].end(),
                              std::back_inserter(common));
        for (int w : common)
            if (w > v) P.triangles.push_back({u, v, w});
    }
    for (const auto& t : P.triangles) {
        std::vector<int> common;
        std::set_intersection(P.adjacency[static_cast<std::size_t>(t[0])].begin(),
                              P.adjacency[static_cast<std::size_t>(t[0])].end(),
                              P.adjacency[static_cast<std::size_t>(t[1])].begin(),
                              P.adjacency[static_cast<std::size_t>(t[1])].end(),
                              std::back_inserter(common));
        for (int x : common) {
            if (x <= t[2]) continue;
            if (P.adjacent(t[2], x)) P.tetrahedra.push_back({t[0], t[1], t[2], x});
        }
    }
    return P;
}

const Polytope600& the_600cell() {
    static const Polytope600 P = generate_600cell();
    return P;
}

SimplicialComplex complex_600cell() {
    const Polytope600& P = the_600cell();
    std::vector<std::string> labels;
    labels.reserve(120);
    for (int i = 0; i < 120; ++i) labels.push_back("z" + std::to_string(i));
    std::vector<Simplex> maximal;
    maximal.reserve(P.tetrahedra.size());
    for (const auto& t : P.tetrahedra) maximal.push_back(Simplex{t[0], t[1], t[2], t[3]});
    return SimplicialComplex::build(std::move(labels), maximal);
}

SimplicialComplex generate_icosahedron() {
    const Golden one(1), phi = Golden::phi();
    std::vector<GoldenVector> verts;
    for (int c = 0; c < 3; ++c)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
                GoldenVector v(3);
                v[static_cast<std::size_t>(c)] = Golden(0);
                v[static_cast<std::size_t>((c + 1) % 3)] = s1 ? -one : one;
                v[static_cast<std::size_t>((c + 2) % 3)] = s2 ? -phi : phi;
                verts.push_back(std::move(v));
            }
    auto dot = [&](int u, int w) {
        Golden s;
        for (std::size_t t = 0; t < 3; ++t) s += verts[static_cast<std::size_t>(u)][t] * verts[static_cast<std::size_t>(w)][t];
        return s;
    };
    std::vector<std::vector<int>> adj(12);
    for (int u = 0; u < 12; ++u)
        for (int w = u + 1; w < 12; ++w)
            if (dot(u, w) == phi) {
                adj[static_cast<std::size_t>(u)].push_back(w);
                adj[static_cast<std::size_t>(w)].push_back(u);
            }
    std::vector<Simplex> maximal;
    for (int u = 0; u < 12; ++u)
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (w < u) continue;
            for (int x : adj[static_cast<std::size_t>(u)]) {
                if (x <= w) continue;
                if (std::find(adj[static_cast<std::size_t>(w)].begin(),
                              adj[static_cast<std::size_t>(w)].end(),
                              x) != adj[static_cast<std::size_t>(w)].end())
                    maximal.push_back({u, w, x});
            }
        }
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back("v" + std::to_string(i));
    return SimplicialComplex::build(std::move(labels), maximal);
}

}  // namespace wallcert
