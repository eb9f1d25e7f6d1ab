#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallcert/construct.hpp"
#include "wallcert/subdivide.hpp"

namespace wallcert {

/// Structured verdict record. A failing certificate always carries at least
/// one concrete witness in details["witnesses"].
struct Certificate {
    std::string check;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
    std::int64_t elapsed_ms = 0;

    nlohmann::json to_json() const;
};

/// Signature (n,1) of B_n by exact leading principal minors: all nonzero,
/// exactly one sign change (equivalently n positive pivots and one
/// negative), plus the (1+phi)-eigenrelation and the negative-determinant
/// check on the span of (sum of the first n basis vectors) and e_{n+1}.
Certificate certify_signature(int n);

/// Positive definiteness of the Galois conjugate of B_n: all n+1 leading
/// principal minors positive.
Certificate certify_galois_positive(int n);

/// The full pairwise Gram sweep: diagonal = 1, adjacent pairs = 0,
/// non-adjacent pairs <= -phi, with the worst non-adjacent value and
/// witnesses reported. The only concurrent check; deterministic output
/// independent of the worker count.
Certificate certify_nerve(const SubdivisionMap& sub, const VectorAssignment& va, int workers);

/// Z[phi]-integrality of every wall vector and, for every reflection R_v,
/// R_v^2 = I, R_v^T B R_v = B and the timelike probe inner(t, R_v t) < 0
/// with t = e_{n+1}.
Certificate certify_lattice_membership(const SubdivisionMap& sub, const VectorAssignment& va);

/// Zariski density inputs: dim L >= 1, the subdivision 1-skeleton is not a
/// join, the wall vectors span the full space with some vector having a
/// nonzero last coordinate.
Certificate certify_zariski(const SubdivisionMap& sub, const VectorAssignment& va);

/// The table-driven bound suite: row sums >= 1 (case 1), phi*c <= S row
/// inequalities (case 2), and the exhaustive 78 + 66 radical-free
/// Cauchy-Schwarz bounds (cases 3 and 4), including the sweep over all slot
/// choices and the record of whether the leading-coefficient slotting is
/// extremal.
Certificate exhaustive_case_checks();

/// Delegates to the combinatorial flag-no-square test, wrapped as a
/// certificate with counts and a witness square on failure.
Certificate certify_flag_no_square(const SimplicialComplex& complex);

/// (1+phi) sqrt(A A') <= phi S S' - phi, decided without radicals: the right
/// side must be nonnegative and the squares must compare. Used by the case
/// sweep; exposed for the soundness oracle.
bool cauchy_schwarz_bound_holds(const Golden& S, const Golden& Sp, const Golden& A,
                                const Golden& Ap);

struct PipelineOptions {
    int n = -1;       // ambient dimension; -1 = number of vertices of L
    int workers = 0;  // 0 = hardware concurrency
    // empty = run everything; names: signature, galois_positive, nerve,
    // lattice_membership, zariski_density, flag_no_square, exhaustive_cases
    std::vector<std::string> checks;
};

struct PipelineResult {
    int n = 0;
    SubdivisionMap sub;
    VectorAssignment assignment;
    std::vector<Certificate> certificates;
    bool all_pass = false;
};

/// Full certification: subdivision, assignment, then every check above.
PipelineResult certify_pipeline(const SimplicialComplex& L, PipelineOptions opt = {});

nlohmann::json certificates_to_json(const std::vector<Certificate>& certs);

}  // namespace wallcert
