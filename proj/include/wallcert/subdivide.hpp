#pragma once

#include <array>
#include <string>
#include <vector>

#include "wallcert/complex.hpp"

namespace wallcert {

/// Per-vertex annotation of a subdivision: the carrier is the simplex of the
/// source complex containing the vertex in its interior; level = dim of the
/// carrier. role holds the distinguished corner (source vertex index) for
/// level-2 vertices and the matched 600-cell vertex id for level-3 vertices,
/// -1 otherwise.
struct VertexInfo {
    Simplex carrier;
    int level = 0;
    int role = -1;
};

struct SubdivisionMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<VertexInfo> info;  // indexed by target vertex

    /// Target vertex ids by carrier, for lookups in tests and exports.
    int level0_vertex(int source_vertex) const;
    int level1_vertex(int u, int v) const;
    int level2_vertex(int apex, int b, int c) const;
};

/// Edge-midpoint + triangle subdivision for complexes of dimension <= 2.
/// Each triangle becomes the 9-vertex block (corners, midpoints, inner
/// triangle) with 18 edges and 10 triangles.
SubdivisionMap dranishnikov_subdivide(const SimplicialComplex& L);

/// Subdivision for dimension <= 3: the 2-skeleton is subdivided as above and
/// every tetrahedron is replaced by the canonical 116-vertex full subcomplex
/// of the 600-cell, glued along its subdivided boundary.
SubdivisionMap ps_subdivide(const SimplicialComplex& L);

}  // namespace wallcert
