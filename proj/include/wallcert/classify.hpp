#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wallcert/complex.hpp"
#include "wallcert/subdivide.hpp"

namespace wallcert {

/// Predicted limit-set type for a certified input complex, with computable
/// evidence kept separate from cited facts.
struct LimitSetVerdict {
    std::string label;                  // see classify_limit_set
    nlohmann::json params;              // d, p, chi, orientable, ...
    std::vector<std::string> evidence;  // computed facts
    std::vector<std::string> caveats;   // cited / tagged facts, limits of the computation

    nlohmann::json to_json() const;
};

/// Decision tree:
///  - closed connected d-manifold (d <= 3): sphere recognition first
///    (d <= 2 computed, d = 3 via the standard_sphere tag), else the tree of
///    manifolds X(N) / X(N # N-bar); nonorientable chi = 1 surfaces are
///    recognized as the projective plane, giving the Pontryagin surface
///    Pi_2; 3-manifolds with sphere homology give the Cech-cohomology
///    3-sphere verdict (non-standard when tagged).
///  - validated p-fold dunce hats (tags): Pontryagin surface Pi_p.
///  - anything else: unclassified.
LimitSetVerdict classify_limit_set(const SimplicialComplex& L, const nlohmann::json& tags);

/// Necessary-evidence battery for the Menger-curve subgroup: K = the full
/// subcomplex of the subdivision minus one level-0 vertex off the core.
/// Reports: K connected, join-free, homology of a circle, and for every
/// simplex sigma of K (including the empty one) vanishing H^k for k >= 2
/// plus connectivity after deleting sigma.
struct MengerReport {
    bool all_pass = false;
    std::string chosen_vertex;
    nlohmann::json details;

    nlohmann::json to_json() const;
};

/// vertex_label may pick the deleted vertex explicitly; it must be a source
/// vertex off the core. Empty picks the first such vertex in label order.
MengerReport menger_evidence(const SubdivisionMap& sub, const nlohmann::json& tags,
                             const std::string& vertex_label = "");

}  // namespace wallcert
