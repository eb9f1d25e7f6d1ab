#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wallcert/complex.hpp"
#include "wallcert/golden.hpp"

namespace wallcert {

/// The 600-cell with exact golden coordinates: 120 unit vertices in
/// Euclidean 4-space, adjacency at dot product phi/2, and the clique
/// completion of the edge graph up to dimension 3.
struct Polytope600 {
    std::vector<GoldenVector> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    bool adjacent(int u, int v) const;
    /// Exact Euclidean dot product of two vertices.
    Golden dot(int u, int v) const;
};

Polytope600 generate_600cell();
const Polytope600& the_600cell();  // shared, built once

/// Clique complex of the 600-cell edge graph (vertex labels "z0".."z119").
SimplicialComplex complex_600cell();

/// 12-vertex icosahedron from golden coordinates (0, ±1, ±phi) and cyclic
/// permutations; edges at dot product phi, faces by clique completion.
SimplicialComplex generate_icosahedron();

}  // namespace wallcert
