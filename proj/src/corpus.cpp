#include "wallcert/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "wallcert/homology.hpp"

namespace wallcert {

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

SimplicialComplex from_triangles(int n, const std::vector<std::array<int, 3>>& tris) {
    std::vector<Simplex> maximal;
    maximal.reserve(tris.size());
    for (const auto& t : tris) maximal.push_back(Simplex{t[0] - 1, t[1] - 1, t[2] - 1});
    return SimplicialComplex::build(numbered_labels(n), maximal);
}

// Fig-style dunce hat triangulations: core circle on vertices 1,2,3, inner
// ceil(3p/2)-gon on the rest.
const std::vector<std::array<int, 3>> kDunce2 = {
    {1, 2, 5}, {1, 3, 5}, {3, 4, 5}, {2, 3, 4}, {1, 2, 4},
    {1, 4, 6}, {1, 3, 6}, {2, 3, 6}, {2, 5, 6}, {4, 5, 6},
};

const std::vector<std::array<int, 3>> kDunce3 = {
    {1, 3, 6}, {1, 2, 6}, {2, 3, 7}, {1, 3, 7}, {1, 2, 8}, {2, 3, 8},
    {1, 3, 4}, {1, 2, 5}, {2, 3, 5},
    {2, 6, 7}, {1, 7, 8}, {3, 4, 8}, {1, 4, 5}, {3, 5, 6},
    {4, 5, 6}, {4, 6, 7}, {4, 7, 8},
};

const std::vector<std::array<int, 3>> kDunce5 = {
    {1, 2, 8}, {2, 3, 8}, {1, 3, 9}, {1, 2, 9}, {2, 3, 10}, {1, 3, 10},
    {1, 2, 11}, {2, 3, 11}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 6},
    {1, 2, 6}, {2, 3, 7}, {1, 3, 7},
    {3, 8, 9}, {2, 9, 10}, {1, 10, 11}, {3, 4, 11}, {1, 4, 5}, {3, 5, 6},
    {2, 6, 7}, {1, 7, 8},
    {4, 5, 6}, {4, 6, 7}, {4, 7, 8}, {4, 8, 9}, {4, 9, 10}, {4, 10, 11},
};

// Generator for other p, following the same pattern: each inner vertex
// covers a contiguous arc of the outer 3p-gon, consecutive arcs overlapping
// in one vertex, exactly one arc of length 2 when p is odd.
std::vector<std::array<int, 3>> dunce_triangles(int p) {
    const int m = (3 * p + 1) / 2;  // inner polygon size
    const int outer = 3 * p;
    auto outer_label = [&](int t) { return ((t % outer) + outer) % outer % 3 + 1; };
    auto inner_label = [&](int r) { return ((r % m) + m) % m + 4; };
    std::vector<int> arc_len(static_cast<std::size_t>(m), 3);
    if (3 * p % 2 == 1) arc_len[0] = 2;
    std::vector<std::array<int, 3>> tris;
    int s = 0;
    for (int r = 0; r < m; ++r) {
        int len = arc_len[static_cast<std::size_t>(r)];
        for (int t = 0; t + 1 < len; ++t)
            tris.push_back({inner_label(r), outer_label(s + t), outer_label(s + t + 1)});
        // bridge to the next inner vertex at the shared outer vertex
        tris.push_back({inner_label(r), inner_label(r + 1), outer_label(s + len - 1)});
        s += len - 1;
    }
    for (int r = 1; r + 1 < m; ++r)
        tris.push_back({inner_label(0), inner_label(r), inner_label(r + 1)});
    return tris;
}

nlohmann::json dunce_tags(int p) {
    return nlohmann::json{
        {"moore_space_p", p},
        {"core_vertices", {"1", "2", "3"}},
        {"core_edges", {{"1", "2"}, {"2", "3"}, {"1", "3"}}},
    };
}

// 90 facets of the 16-vertex triangulation of the Poincare homology
// 3-sphere (Bjorner-Lutz). Also shipped as data/poincare_16.json; the
// corpus loader validates it as a closed orientable 3-manifold with the
// homology of S^3.
const int kPoincare16[90][4] = {
    {1, 2, 4, 9},    {1, 2, 4, 15},   {1, 2, 6, 14},   {1, 2, 6, 15},   {1, 2, 9, 14},
    {1, 3, 4, 12},   {1, 3, 4, 15},   {1, 3, 7, 10},   {1, 3, 7, 12},   {1, 3, 10, 15},
    {1, 4, 9, 12},   {1, 5, 6, 13},   {1, 5, 6, 14},   {1, 5, 8, 11},   {1, 5, 8, 13},
    {1, 5, 11, 14},  {1, 6, 13, 15},  {1, 7, 8, 10},   {1, 7, 8, 11},   {1, 7, 11, 12},
    {1, 8, 10, 13},  {1, 9, 11, 12},  {1, 9, 11, 14},  {1, 10, 13, 15}, {2, 3, 5, 10},
    {2, 3, 5, 11},   {2, 3, 7, 10},   {2, 3, 7, 13},   {2, 3, 11, 13},  {2, 4, 9, 13},
    {2, 4, 11, 13},  {2, 4, 11, 15},  {2, 5, 8, 11},   {2, 5, 8, 12},   {2, 5, 10, 12},
    {2, 6, 10, 12},  {2, 6, 10, 14},  {2, 6, 12, 15},  {2, 7, 9, 13},   {2, 7, 9, 14},
    {2, 7, 10, 14},  {2, 8, 11, 15},  {2, 8, 12, 15},  {3, 4, 5, 14},   {3, 4, 5, 15},
    {3, 4, 12, 14},  {3, 5, 10, 15},  {3, 5, 11, 14},  {3, 7, 12, 13},  {3, 11, 13, 14},
    {3, 12, 13, 14}, {4, 5, 6, 7},    {4, 5, 6, 14},   {4, 5, 7, 15},   {4, 6, 7, 11},
    {4, 6, 10, 11},  {4, 6, 10, 14},  {4, 7, 11, 15},  {4, 8, 9, 12},   {4, 8, 9, 13},
    {4, 8, 10, 13},  {4, 8, 10, 14},  {4, 8, 12, 14},  {4, 10, 11, 13}, {5, 6, 7, 13},
    {5, 7, 9, 13},   {5, 7, 9, 15},   {5, 8, 9, 12},   {5, 8, 9, 13},   {5, 9, 10, 12},
    {5, 9, 10, 15},  {6, 7, 11, 12},  {6, 7, 12, 13},  {6, 10, 11, 12}, {6, 12, 13, 15},
    {7, 8, 10, 14},  {7, 8, 11, 15},  {7, 8, 14, 15},  {7, 9, 14, 15},  {8, 12, 14, 15},
    {9, 10, 11, 12}, {9, 10, 11, 16}, {9, 10, 15, 16}, {9, 11, 14, 16}, {9, 14, 15, 16},
    {10, 11, 13, 16}, {10, 13, 15, 16}, {11, 13, 14, 16}, {12, 13, 14, 15}, {13, 14, 15, 16},
};

void validate_homology(const SimplicialComplex& c, const HomologyProfile& expect,
                       const std::string& name) {
    if (homology(c) != expect)
        throw std::runtime_error("corpus: " + name + " failed homology validation");
}

HomologyProfile profile(std::initializer_list<HomologyGroup> groups) {
    HomologyProfile p;
    std::size_t k = 0;
    for (const auto& g : groups) p.h[k++] = g;
    return p;
}

}  // namespace

const std::vector<Simplex>& poincare16_facets() {
    static const std::vector<Simplex> facets = [] {
        std::vector<Simplex> out;
        out.reserve(90);
        for (const auto& f : kPoincare16)
            out.push_back(Simplex{f[0] - 1, f[1] - 1, f[2] - 1, f[3] - 1});
        return out;
    }();
    return facets;
}

CorpusEntry dunce_hat(int p) {
    if (p < 2) throw std::invalid_argument("dunce_hat: p must be >= 2");
    std::vector<std::array<int, 3>> tris;
    if (p == 2) tris = kDunce2;
    else if (p == 3) tris = kDunce3;
    else if (p == 5) tris = kDunce5;
    else tris = dunce_triangles(p);
    const int n = (3 * p + 1) / 2 + 3;
    CorpusEntry e;
    e.name = "dunce_hat_" + std::to_string(p);
    e.complex = from_triangles(n, tris);
    e.tags = dunce_tags(p);
    validate_homology(e.complex, profile({{1, {}}, {0, {static_cast<long>(p)}}, {0, {}}, {0, {}}}),
                      e.name);
    return e;
}

SimplicialComplex simplex_skeleton(int n, int d) {
    if (d < 1 || d > 3 || n < d + 1)
        throw std::invalid_argument("simplex_skeleton: need 1 <= d <= 3 and n >= d+1");
    std::vector<Simplex> maximal;
    std::vector<int> idx(static_cast<std::size_t>(d + 1));
    // enumerate all (d+1)-subsets of {0..n-1}
    for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        maximal.push_back(Simplex(idx.begin(), idx.end()));
        int k = d;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 1 - (d - k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j <= d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return SimplicialComplex::build(numbered_labels(n), maximal);
}

namespace {

CorpusEntry make_rp2_6() {
    CorpusEntry e;
    e.name = "rp2_6";
    e.complex = from_triangles(6, kDunce2);
    e.tags = {{"description", "6-vertex projective plane"},
              {"expected_manifold_dim", 2},
              {"expected_orientable", false}};
    validate_homology(e.complex, profile({{1, {}}, {0, {2}}, {0, {}}, {0, {}}}), e.name);
    return e;
}

CorpusEntry make_torus_7() {
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 7; ++i) {
        auto w = [&](int k) { return (i + k) % 7 + 1; };
        tris.push_back({w(0), w(1), w(3)});
        tris.push_back({w(0), w(2), w(3)});
    }
    CorpusEntry e;
    e.name = "torus_7";
    e.complex = from_triangles(7, tris);
    e.tags = {{"description", "7-vertex torus"},
              {"expected_manifold_dim", 2},
              {"expected_orientable", true}};
    validate_homology(e.complex, profile({{1, {}}, {2, {}}, {1, {}}, {0, {}}}), e.name);
    return e;
}

CorpusEntry make_poincare_16() {
    CorpusEntry e;
    e.name = "poincare_16";
    e.complex = SimplicialComplex::build(numbered_labels(16), poincare16_facets());
    e.tags = {{"description", "16-vertex Poincare homology 3-sphere"},
              {"source", "Bjorner-Lutz 16-vertex triangulation"},
              {"nonstandard_homology_sphere", true}};
    validate_homology(e.complex, profile({{1, {}}, {0, {}}, {0, {}}, {1, {}}}), e.name);
    if (e.complex.closed_manifold_dim() != 3 || !e.complex.is_orientable())
        throw std::runtime_error("corpus: poincare_16 failed manifold validation");
    return e;
}

CorpusEntry make_sphere(int d) {
    CorpusEntry e;
    e.name = "sphere_" + std::to_string(d);
    e.complex = simplex_skeleton(d + 2, d);
    e.tags = {{"description", "boundary of the " + std::to_string(d + 1) + "-simplex"},
              {"standard_sphere", true}};
    return e;
}

}  // namespace

std::optional<CorpusEntry> corpus_get(const std::string& name) {
    try {
        if (name == "rp2_6") return make_rp2_6();
        if (name == "torus_7") return make_torus_7();
        if (name == "poincare_16") return make_poincare_16();
        if (name.rfind("sphere_", 0) == 0) {
            int d = std::stoi(name.substr(7));
            if (d < 1 || d > 3) return std::nullopt;
            return make_sphere(d);
        }
        if (name.rfind("dunce_hat_", 0) == 0) {
            int p = std::stoi(name.substr(10));
            if (p < 2) return std::nullopt;
            CorpusEntry e = dunce_hat(p);
            return e;
        }
        if (name.rfind("simplex_skeleton_", 0) == 0) {
            auto rest = name.substr(17);
            auto sep = rest.find('_');
            if (sep == std::string::npos) return std::nullopt;
            int n = std::stoi(rest.substr(0, sep));
            int d = std::stoi(rest.substr(sep + 1));
            CorpusEntry e;
            e.name = name;
            e.complex = simplex_skeleton(n, d);
            e.tags = {{"description", "skeleton of a simplex"}};
            return e;
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> corpus_list() {
    return {
        {"rp2_6", "6-vertex projective plane (complete graph K6)"},
        {"torus_7", "7-vertex torus"},
        {"dunce_hat_2", "2-fold dunce hat (= rp2_6 with core tags)"},
        {"dunce_hat_3", "3-fold dunce hat, 8 vertices"},
        {"dunce_hat_5", "5-fold dunce hat, 11 vertices"},
        {"poincare_16", "16-vertex Poincare homology 3-sphere"},
        {"sphere_1", "boundary of the 2-simplex"},
        {"sphere_2", "boundary of the 3-simplex"},
        {"sphere_3", "boundary of the 4-simplex"},
        {"simplex_skeleton_<n>_<d>", "d-skeleton of the (n-1)-simplex (parametric)"},
        {"dunce_hat_<p>", "p-fold dunce hat for other p (generated, homology-gated)"},
    };
}

}  // namespace wallcert
