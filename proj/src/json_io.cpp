#include "wallcert/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace wallcert {

namespace {

std::int64_t to_i64(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::domain_error(std::string("golden_to_json: ") + what +
                                " does not fit in a 64-bit integer");
    return z.get_si();
}

}  // namespace

nlohmann::json golden_to_json(const Golden& g) {
    return nlohmann::json::array({
        to_i64(g.unit_part().get_num(), "p numerator"),
        to_i64(g.unit_part().get_den(), "p denominator"),
        to_i64(g.phi_part().get_num(), "q numerator"),
        to_i64(g.phi_part().get_den(), "q denominator"),
    });
}

Golden golden_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("golden_from_json: expected [pn, pd, qn, qd]");
    mpq_class p(mpz_class(j[0].get<std::int64_t>()), mpz_class(j[1].get<std::int64_t>()));
    mpq_class q(mpz_class(j[2].get<std::int64_t>()), mpz_class(j[3].get<std::int64_t>()));
    return Golden(p, q);
}

nlohmann::json vector_to_json(const GoldenVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(golden_to_json(v[i]));
    return a;
}

nlohmann::json matrix_to_json(const GoldenMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(golden_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json complex_to_json(const SimplicialComplex& c, const std::string& name,
                               const nlohmann::json& tags) {
    nlohmann::json j;
    j["name"] = name;
    j["vertices"] = c.labels();
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& s : c.maximal_simplices()) {
        nlohmann::json t = nlohmann::json::array();
        for (int v : s) t.push_back(c.label(v));
        ms.push_back(std::move(t));
    }
    j["maximal_simplices"] = std::move(ms);
    j["tags"] = tags;
    return j;
}

NamedComplex complex_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j.contains("maximal_simplices"))
        throw std::invalid_argument("complex_from_json: missing vertices/maximal_simplices");
    NamedComplex out;
    out.name = j.value("name", "unnamed");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx.emplace(labels[i], i);
    std::vector<Simplex> maximal;
    for (const auto& s : j.at("maximal_simplices")) {
        Simplex t;
        for (const auto& l : s) {
            auto it = idx.find(l.get<std::string>());
            if (it == idx.end())
                throw std::invalid_argument("complex_from_json: simplex uses unknown vertex " +
                                            l.get<std::string>());
            t.push_back(it->second);
        }
        maximal.push_back(std::move(t));
    }
    out.complex = SimplicialComplex::build(std::move(labels), maximal);
    out.tags = j.value("tags", nlohmann::json::object());
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace wallcert
