#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wallcert {

/// Sorted tuple of vertex indices.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BuildOptions {
    bool allow_high_dim = false;  // lift the pipeline dimension <= 3 guard
    bool allow_empty = false;
};

/// Finite abstract simplicial complex. Vertex labels are strings mapped to
/// dense indices at build time; all algorithms run on indices. Immutable
/// after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from maximal simplices over an explicit vertex list (which fixes
    /// index order). Every vertex must appear in some simplex; isolated
    /// vertices are given as singletons.
    static SimplicialComplex build(std::vector<std::string> labels,
                                   const std::vector<Simplex>& maximal,
                                   BuildOptions opt = {});
    static SimplicialComplex build_from_labels(
        const std::vector<std::vector<std::string>>& maximal,
        BuildOptions opt = {});

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int dimension() const { return dim_; }
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const;

    /// Faces of dimension d, sorted lexicographically.
    const std::vector<Simplex>& faces(int d) const;
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    bool has_face(const Simplex& sorted) const;
    std::size_t num_faces() const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    SimplicialComplex full_subcomplex(std::vector<int> vertices) const;
    SimplicialComplex full_subcomplex_labels(const std::vector<std::string>& keep) const;
    SimplicialComplex link(const Simplex& sorted) const;
    SimplicialComplex skeleton(int d) const;

    bool is_connected() const;
    bool is_flag() const;

    struct SquareWitness {
        int a = -1, b = -1, c = -1, d = -1;  // induced cycle a-b-c-d-a
    };
    bool is_flag_no_square(SquareWitness* witness = nullptr) const;

    /// Nontrivial join split of the 1-skeleton (every cross pair adjacent),
    /// if one exists. Decided via connectivity of the complement graph.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> join_decomposition() const;

    /// Dimension (1..3) if this triangulates a closed connected manifold,
    /// otherwise -1.
    int closed_manifold_dim() const;
    bool is_closed_manifold() const { return closed_manifold_dim() >= 1; }
    /// Coherent-orientation search; requires closed_manifold_dim() >= 1.
    bool is_orientable() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<Simplex>> faces_;  // by dimension
    std::unordered_set<Simplex, SimplexHash> face_set_;
    std::vector<Simplex> maximal_;
    std::vector<std::vector<int>> adj_;
    int dim_ = -1;

    void derive_caches();
};

}  // namespace wallcert
