#include "wallcert/subdivide.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "wallcert/construct.hpp"

namespace wallcert {

int SubdivisionMap::level0_vertex(int source_vertex) const {
    for (int v = 0; v < static_cast<int>(info.size()); ++v)
        if (info[static_cast<std::size_t>(v)].level == 0 &&
            info[static_cast<std::size_t>(v)].carrier[0] == source_vertex)
            return v;
    throw std::invalid_argument("level0_vertex: not found");
}

int SubdivisionMap::level1_vertex(int u, int v) const {
    Simplex key = {std::min(u, v), std::max(u, v)};
    for (int w = 0; w < static_cast<int>(info.size()); ++w)
        if (info[static_cast<std::size_t>(w)].level == 1 &&
            info[static_cast<std::size_t>(w)].carrier == key)
            return w;
    throw std::invalid_argument("level1_vertex: not found");
}

int SubdivisionMap::level2_vertex(int apex, int b, int c) const {
    Simplex key = {apex, b, c};
    std::sort(key.begin(), key.end());
    for (int w = 0; w < static_cast<int>(info.size()); ++w)
        if (info[static_cast<std::size_t>(w)].level == 2 &&
            info[static_cast<std::size_t>(w)].carrier == key &&
            info[static_cast<std::size_t>(w)].role == apex)
            return w;
    throw std::invalid_argument("level2_vertex: not found");
}

namespace {

struct Builder {
    const SimplicialComplex& L;
    std::vector<std::string> labels;
    std::vector<VertexInfo> info;
    std::unordered_map<Simplex, int, SimplexHash> midpoint;        // edge -> id
    std::map<std::pair<Simplex, int>, int> tri_vertex;             // (triangle, apex) -> id
    std::vector<Simplex> inventory;

    explicit Builder(const SimplicialComplex& src) : L(src) {}

    int add_vertex(std::string label, Simplex carrier, int level, int role) {
        labels.push_back(std::move(label));
        info.push_back(VertexInfo{std::move(carrier), level, role});
        return static_cast<int>(labels.size()) - 1;
    }

    void build_two_skeleton() {
        for (int v = 0; v < L.num_vertices(); ++v) add_vertex(L.label(v), {v}, 0, -1);
        for (const auto& e : L.faces(1)) {
            int id = add_vertex("m[" + L.label(e[0]) + "," + L.label(e[1]) + "]", e, 1, -1);
            midpoint.emplace(e, id);
        }
        for (const auto& t : L.faces(2))
            for (int apex : t) {
                std::vector<int> rest;
                for (int v : t)
                    if (v != apex) rest.push_back(v);
                int id = add_vertex("t[" + L.label(apex) + "|" + L.label(rest[0]) + "," +
                                        L.label(rest[1]) + "]",
                                    t, 2, apex);
                tri_vertex.emplace(std::make_pair(t, apex), id);
            }
        // isolated source vertices stay as 0-simplices
        for (int v = 0; v < L.num_vertices(); ++v)
            if (L.neighbors(v).empty()) inventory.push_back({v});
        // split edges
        for (const auto& e : L.faces(1)) {
            int m = midpoint.at(e);
            inventory.push_back({e[0], m});
            inventory.push_back({e[1], m});
        }
        // triangle blocks: corners, midpoints, inner triangle
        for (const auto& t : L.faces(2)) {
            auto mid = [&](int a, int b) {
                Simplex key = {std::min(a, b), std::max(a, b)};
                return midpoint.at(key);
            };
            auto tv = [&](int apex) { return tri_vertex.at(std::make_pair(t, apex)); };
            const int i = t[0], j = t[1], k = t[2];
            const int mij = mid(i, j), mjk = mid(j, k), mki = mid(k, i);
            const int ti = tv(i), tj = tv(j), tk = tv(k);
            const int tris[10][3] = {
                {i, mij, ti}, {i, mki, ti}, {j, mij, tj}, {j, mjk, tj}, {k, mjk, tk},
                {k, mki, tk}, {mij, ti, tj}, {mjk, tj, tk}, {mki, tk, ti}, {ti, tj, tk},
            };
            for (const auto& tr : tris) inventory.push_back({tr[0], tr[1], tr[2]});
        }
    }

    std::vector<Simplex> face_triangles(const Simplex& t) {
        auto mid = [&](int a, int b) {
            Simplex key = {std::min(a, b), std::max(a, b)};
            return midpoint.at(key);
        };
        auto tv = [&](int apex) { return tri_vertex.at(std::make_pair(t, apex)); };
        const int i = t[0], j = t[1], k = t[2];
        const int mij = mid(i, j), mjk = mid(j, k), mki = mid(k, i);
        const int ti = tv(i), tj = tv(j), tk = tv(k);
        std::vector<Simplex> out = {
            {i, mij, ti}, {i, mki, ti}, {j, mij, tj}, {j, mjk, tj}, {k, mjk, tk},
            {k, mki, tk}, {mij, ti, tj}, {mjk, tj, tk}, {mki, tk, ti}, {ti, tj, tk},
        };
        for (auto& s : out) std::sort(s.begin(), s.end());
        return out;
    }

    void attach_blocks() {
        const CanonicalBlock& B = canonical_block();
        for (const auto& tet : L.faces(3)) {
            // local slot m corresponds to the m-th vertex of the sorted tet
            std::vector<int> global(B.verts.size(), -1);
            for (std::size_t lid = 0; lid < B.verts.size(); ++lid) {
                const BlockVertex& bv = B.verts[lid];
                switch (bv.level) {
                    case 0:
                        global[lid] = tet[static_cast<std::size_t>(bv.corner)];
                        break;
                    case 1: {
                        int a = tet[static_cast<std::size_t>(bv.edge[0])];
                        int b = tet[static_cast<std::size_t>(bv.edge[1])];
                        Simplex key = {std::min(a, b), std::max(a, b)};
                        global[lid] = midpoint.at(key);
                        break;
                    }
                    case 2: {
                        int apex = tet[static_cast<std::size_t>(bv.apex)];
                        Simplex t = {apex, tet[static_cast<std::size_t>(bv.others[0])],
                                     tet[static_cast<std::size_t>(bv.others[1])]};
                        std::sort(t.begin(), t.end());
                        global[lid] = tri_vertex.at(std::make_pair(t, apex));
                        break;
                    }
                    case 3: {
                        std::string label = "c[" + L.label(tet[0]) + "," + L.label(tet[1]) + "," +
                                            L.label(tet[2]) + "," + L.label(tet[3]) + ";z" +
                                            std::to_string(bv.cell_vertex) + "]";
                        global[lid] = add_vertex(std::move(label), tet, 3, bv.cell_vertex);
                        break;
                    }
                    default:
                        throw std::logic_error("attach_blocks: bad block level");
                }
            }
            std::vector<Simplex> boundary_triangles;
            for (const auto& tr : B.triangles) {
                Simplex s = {global[static_cast<std::size_t>(tr[0])],
                             global[static_cast<std::size_t>(tr[1])],
                             global[static_cast<std::size_t>(tr[2])]};
                std::sort(s.begin(), s.end());
                bool interior = false;
                for (int lid : {tr[0], tr[1], tr[2]})
                    if (B.verts[static_cast<std::size_t>(lid)].level == 3) interior = true;
                if (!interior) boundary_triangles.push_back(s);
                inventory.push_back(std::move(s));
            }
            for (const auto& te : B.tetrahedra) {
                Simplex s = {global[static_cast<std::size_t>(te[0])],
                             global[static_cast<std::size_t>(te[1])],
                             global[static_cast<std::size_t>(te[2])],
                             global[static_cast<std::size_t>(te[3])]};
                std::sort(s.begin(), s.end());
                inventory.push_back(std::move(s));
            }
            // The block boundary must be exactly the subdivided boundary of
            // the tetrahedron; a mismatch means the coordinate matching broke.
            std::vector<Simplex> expected;
            for (std::size_t drop = 0; drop < 4; ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < 4; ++i)
                    if (i != drop) face.push_back(tet[i]);
                auto tris = face_triangles(face);
                expected.insert(expected.end(), tris.begin(), tris.end());
            }
            std::sort(expected.begin(), expected.end());
            std::sort(boundary_triangles.begin(), boundary_triangles.end());
            if (expected != boundary_triangles)
                throw std::logic_error(
                    "ps_subdivide: block boundary does not match the subdivided boundary");
        }
    }

    SubdivisionMap finish() {
        SubdivisionMap out;
        out.source = L;
        out.target = SimplicialComplex::build(labels, inventory);
        out.info = std::move(info);
        return out;
    }
};

}  // namespace

SubdivisionMap dranishnikov_subdivide(const SimplicialComplex& L) {
    if (L.dimension() > 2)
        throw std::invalid_argument("dranishnikov_subdivide: dimension must be <= 2");
    Builder b(L);
    b.build_two_skeleton();
    return b.finish();
}

SubdivisionMap ps_subdivide(const SimplicialComplex& L) {
    if (L.dimension() > 3)
        throw std::invalid_argument("ps_subdivide: dimension must be <= 3");
    Builder b(L);
    b.build_two_skeleton();
    b.attach_blocks();
    return b.finish();
}

}  // namespace wallcert
