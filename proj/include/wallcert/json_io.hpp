#pragma once

#include <string>

#include <json.hpp>

#include "wallcert/complex.hpp"
#include "wallcert/golden.hpp"

namespace wallcert {

/// [p_num, p_den, q_num, q_den] encoding of p + q*phi.
nlohmann::json golden_to_json(const Golden& g);
Golden golden_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const GoldenVector& v);
nlohmann::json matrix_to_json(const GoldenMatrix& m);

/// {"name", "vertices", "maximal_simplices", "tags"}
nlohmann::json complex_to_json(const SimplicialComplex& c, const std::string& name,
                               const nlohmann::json& tags = nlohmann::json::object());
struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
    nlohmann::json tags;
};
NamedComplex complex_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace wallcert
