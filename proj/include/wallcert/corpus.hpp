#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallcert/complex.hpp"

namespace wallcert {

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    nlohmann::json tags;  // metadata consumed by classify and the Menger checks
};

/// Built-in triangulations:
///   rp2_6           6-vertex projective plane (complete-graph triangulation)
///   torus_7         7-vertex torus
///   dunce_hat_<p>   p-fold dunce hat, ceil(3p/2)+3 vertices (2, 3, 5 are
///                   hard-coded; other p generated and gated by homology)
///   poincare_16     16-vertex Poincare homology 3-sphere (shipped data)
///   sphere_<d>      boundary of the (d+1)-simplex, d = 1..3
///   simplex_skeleton_<n>_<d>   d-skeleton of the (n-1)-simplex
std::optional<CorpusEntry> corpus_get(const std::string& name);

/// Names of the finite built-in entries (parametric families excluded).
std::vector<std::pair<std::string, std::string>> corpus_list();

SimplicialComplex simplex_skeleton(int n, int d);
CorpusEntry dunce_hat(int p);

/// Facets of the shipped 16-vertex Poincare homology sphere triangulation.
const std::vector<Simplex>& poincare16_facets();

}  // namespace wallcert
