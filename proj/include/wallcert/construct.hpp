#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wallcert/golden.hpp"
#include "wallcert/subdivide.hpp"

namespace wallcert {

/// The Lorentzian form with 1 on the first n diagonal entries and -phi
/// everywhere else, acting on (n+1)-vectors. Structurally
/// B = -phi*J + (1+phi)*E with J all-ones and E = diag(1..1,0), which gives
/// the O(support) inner product used everywhere.
struct LorentzForm {
    int n = 0;
    GoldenMatrix matrix;

    /// -phi*S(x)*S(y) + (1+phi) * sum_{i<n} x_i y_i; equals x^T B y.
    Golden inner(const GoldenVector& x, const GoldenVector& y) const;
};

LorentzForm bn_form(int n);

/// The fixed 5x5 change of basis between wall vectors of a tetrahedron block
/// and 600-cell coordinates, with g^T B_4 g = diag(2,2,2,2,-phi).
struct GMatrix {
    GoldenMatrix g;
    GoldenMatrix g_inv;  // computed exactly as D^{-1} g^T B_4
};

const GMatrix& build_g();

/// Canonical tetrahedron block: classification of all 120 vertices of the
/// 600-cell under x_p = phi * g * (z_p, 1). Four vertices (tau) map to the
/// deleted walls; the remaining 116 carry the level-0/1/2/3 wall vectors of
/// a subdivided tetrahedron in local coordinates (slots 0..3 plus the last
/// coordinate).
struct BlockVertex {
    int level = -1;
    int corner = -1;               // level 0: slot
    std::array<int, 2> edge{};     // level 1: slots a < b
    int apex = -1;                 // level 2: distinguished slot
    std::array<int, 2> others{};   // level 2: remaining slots a < b
    GoldenVector coords;           // local 5-vector, Z[phi]-integral unit
    int cell_vertex = -1;          // 600-cell vertex id
};

struct CanonicalBlock {
    std::array<int, 4> tau;               // tau[m] = 600-cell vertex deleted for slot m
    std::vector<BlockVertex> verts;       // 116 entries, local ids
    std::vector<int> local_of_cell;       // 120 entries, -1 on tau
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
};

const CanonicalBlock& canonical_block();

/// Wall vectors for every vertex of the subdivision, in Z[phi]^(n+1).
struct VectorAssignment {
    int n = 0;
    std::vector<GoldenVector> vectors;
    std::vector<Golden> coeff_sum;            // S(x), cached
    std::vector<std::vector<int>> support;    // nonzero coordinates among 0..n-1, sorted
};

/// Level 0: e_i. Level 1: e_i + e_j - (2-phi) e_last. Level 2 (apex i):
/// phi e_i + e_j + e_k - e_last. Level 3: the canonical block coordinates
/// placed at the tetrahedron's slots. Unit norm and Z[phi]-integrality are
/// enforced; violations are construction bugs and throw.
VectorAssignment assign_vectors(const SubdivisionMap& sub, int n);

/// R = I - 2 x (x^T B): the B-reflection in the wall orthogonal to x.
GoldenMatrix reflection_matrix(const LorentzForm& form, const GoldenVector& x);

/// Reflection generators of the group: one involution per subdivision
/// vertex, commuting exactly along target edges. Matrices are materialized
/// on demand (corpus runs have thousands of vertices).
struct ReflectionGenerators {
    const LorentzForm* form = nullptr;
    const VectorAssignment* assignment = nullptr;
    const SimplicialComplex* nerve = nullptr;

    GoldenMatrix matrix(int v) const;
    std::size_t count() const { return assignment->vectors.size(); }
};

ReflectionGenerators reflection_generators(const LorentzForm& form,
                                           const VectorAssignment& va,
                                           const SimplicialComplex& nerve);

/// The 14 coefficient rows of the wall-vector table (levels 0..3), each as
/// (four slot coefficients, last coordinate) with its within-tetrahedron
/// multiplicity. Slot coefficients are listed in descending order.
struct CoefficientRow {
    int level;
    std::array<Golden, 4> c;
    Golden last;
    int count;  // number of slot permutations within one tetrahedron
    Golden sum() const;
};
const std::vector<CoefficientRow>& coefficient_table();

}  // namespace wallcert
