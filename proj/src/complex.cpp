#include "wallcert/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace wallcert {

namespace {

void enumerate_subsets(const Simplex& s, std::unordered_set<Simplex, SimplexHash>& out) {
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex sub;
        sub.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        out.insert(std::move(sub));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::vector<std::string> labels,
                                           const std::vector<Simplex>& maximal,
                                           BuildOptions opt) {
    if (maximal.empty() && !opt.allow_empty)
        throw std::invalid_argument("build_complex: empty simplex list");
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(c.labels_.size()); ++i) {
        if (!c.index_.emplace(c.labels_[i], i).second)
            throw std::invalid_argument("build_complex: duplicate vertex label " + c.labels_[i]);
    }
    std::unordered_set<Simplex, SimplexHash> all;
    for (Simplex s : maximal) {
        if (s.empty()) throw std::invalid_argument("build_complex: empty simplex");
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= c.num_vertices())
                throw std::invalid_argument("build_complex: vertex index out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("build_complex: repeated vertex in simplex");
        }
        if (static_cast<int>(s.size()) - 1 > 3 && !opt.allow_high_dim)
            throw std::invalid_argument("build_complex: dimension > 3 not allowed here");
        enumerate_subsets(s, all);
    }
    c.face_set_ = std::move(all);
    c.derive_caches();
    for (int v = 0; v < c.num_vertices(); ++v)
        if (!c.face_set_.count(Simplex{v}))
            throw std::invalid_argument("build_complex: vertex " + c.labels_[v] +
                                        " appears in no simplex");
    return c;
}

SimplicialComplex SimplicialComplex::build_from_labels(
    const std::vector<std::vector<std::string>>& maximal, BuildOptions opt) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> idx;
    for (const auto& s : maximal)
        for (const auto& l : s)
            if (idx.emplace(l, static_cast<int>(labels.size())).second) labels.push_back(l);
    std::vector<Simplex> max_idx;
    max_idx.reserve(maximal.size());
    for (const auto& s : maximal) {
        Simplex t;
        t.reserve(s.size());
        for (const auto& l : s) t.push_back(idx.at(l));
        max_idx.push_back(std::move(t));
    }
    return build(std::move(labels), max_idx, opt);
}

void SimplicialComplex::derive_caches() {
    dim_ = -1;
    for (const auto& s : face_set_) dim_ = std::max(dim_, static_cast<int>(s.size()) - 1);
    faces_.assign(static_cast<std::size_t>(dim_ + 1), {});
    for (const auto& s : face_set_) faces_[s.size() - 1].push_back(s);
    for (auto& fs : faces_) std::sort(fs.begin(), fs.end());

    // A face is maximal iff no face one dimension up contains it.
    std::unordered_set<Simplex, SimplexHash> covered;
    for (int d = 1; d <= dim_; ++d)
        for (const auto& s : faces_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                covered.insert(std::move(sub));
            }
    maximal_.clear();
    for (int d = 0; d <= dim_; ++d)
        for (const auto& s : faces_[d])
            if (!covered.count(s)) maximal_.push_back(s);
    std::sort(maximal_.begin(), maximal_.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    adj_.assign(labels_.size(), {});
    if (dim_ >= 1)
        for (const auto& e : faces_[1]) {
            adj_[e[0]].push_back(e[1]);
            adj_[e[1]].push_back(e[0]);
        }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& fs : faces_) f.push_back(fs.size());
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (const auto& fs : faces_) {
        chi += sign * static_cast<long>(fs.size());
        sign = -sign;
    }
    return chi;
}

int SimplicialComplex::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("unknown vertex label: " + label);
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d > dim_) return kEmpty;
    return faces_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::has_face(const Simplex& sorted) const {
    return face_set_.count(sorted) > 0;
}

std::size_t SimplicialComplex::num_faces() const { return face_set_.size(); }

bool SimplicialComplex::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

SimplicialComplex SimplicialComplex::full_subcomplex(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> remap(labels_.size(), -1);
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= num_vertices())
            throw std::invalid_argument("full_subcomplex: vertex index out of range");
        remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    std::vector<Simplex> kept;
    for (const auto& s : face_set_) {
        bool in = true;
        for (int v : s)
            if (remap[static_cast<std::size_t>(v)] < 0) { in = false; break; }
        if (!in) continue;
        Simplex t;
        t.reserve(s.size());
        for (int v : s) t.push_back(remap[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        kept.push_back(std::move(t));
    }
    BuildOptions opt;
    opt.allow_high_dim = true;
    opt.allow_empty = true;
    return build(std::move(labels), kept, opt);
}

SimplicialComplex SimplicialComplex::full_subcomplex_labels(
    const std::vector<std::string>& keep) const {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (const auto& l : keep) idx.push_back(index_of(l));
    return full_subcomplex(std::move(idx));
}

SimplicialComplex SimplicialComplex::link(const Simplex& sorted) const {
    if (!has_face(sorted)) throw std::invalid_argument("link: simplex not in complex");
    std::vector<Simplex> link_faces;
    std::vector<char> in_sigma(labels_.size(), 0);
    for (int v : sorted) in_sigma[static_cast<std::size_t>(v)] = 1;
    std::vector<char> is_link_vertex(labels_.size(), 0);
    for (const auto& s : face_set_) {
        bool disjoint = true;
        for (int v : s)
            if (in_sigma[static_cast<std::size_t>(v)]) { disjoint = false; break; }
        if (!disjoint) continue;
        Simplex joined;
        joined.reserve(s.size() + sorted.size());
        std::merge(s.begin(), s.end(), sorted.begin(), sorted.end(), std::back_inserter(joined));
        if (!has_face(joined)) continue;
        link_faces.push_back(s);
        for (int v : s) is_link_vertex[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> remap(labels_.size(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < num_vertices(); ++v)
        if (is_link_vertex[static_cast<std::size_t>(v)]) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
            labels.push_back(labels_[static_cast<std::size_t>(v)]);
        }
    for (auto& s : link_faces)
        for (int& v : s) v = remap[static_cast<std::size_t>(v)];
    BuildOptions opt;
    opt.allow_high_dim = true;
    opt.allow_empty = true;
    return build(std::move(labels), link_faces, opt);
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
    std::vector<Simplex> kept;
    for (int k = 0; k <= std::min(d, dim_); ++k)
        for (const auto& s : faces_[static_cast<std::size_t>(k)]) kept.push_back(s);
    BuildOptions opt;
    opt.allow_high_dim = true;
    opt.allow_empty = true;
    return build(labels_, kept, opt);
}

bool SimplicialComplex::is_connected() const {
    const int n = num_vertices();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

bool SimplicialComplex::is_flag() const {
    // Level by level: every (k+1)-clique extending a known k-face must span.
    // Starting from edges, a (k+1)-clique is a k-face plus a common neighbor,
    // so one failed level stops the search soundly.
    for (int d = 1; d <= dim_ + 1; ++d) {
        if (d >= static_cast<int>(faces_.size())) break;
        for (const auto& s : faces_[static_cast<std::size_t>(d)]) {
            // candidates: common neighbors greater than max(s)
            std::vector<int> cand(adj_[static_cast<std::size_t>(s[0])]);
            for (std::size_t i = 1; i < s.size() && !cand.empty(); ++i) {
                const auto& nb = adj_[static_cast<std::size_t>(s[i])];
                std::vector<int> next;
                std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(),
                                      std::back_inserter(next));
                cand.swap(next);
            }
            for (int x : cand) {
                if (x <= s.back()) continue;
                Simplex t = s;
                t.push_back(x);
                if (!has_face(t)) return false;
            }
        }
    }
    return true;
}

bool SimplicialComplex::is_flag_no_square(SquareWitness* witness) const {
    if (!is_flag()) return false;
    // Induced square a-b-c-d: non-adjacent pair (a, c) with two non-adjacent
    // common neighbors. Enumerate wedges grouped by endpoints.
    std::vector<std::pair<std::uint64_t, int>> wedges;
    for (int b = 0; b < num_vertices(); ++b) {
        const auto& nb = adj_[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], c = nb[j];
                if (adjacent(a, c)) continue;
                wedges.emplace_back((static_cast<std::uint64_t>(a) << 32) |
                                        static_cast<std::uint32_t>(c),
                                    b);
            }
    }
    std::sort(wedges.begin(), wedges.end());
    std::size_t i = 0;
    while (i < wedges.size()) {
        std::size_t j = i;
        while (j < wedges.size() && wedges[j].first == wedges[i].first) ++j;
        for (std::size_t s = i; s < j; ++s)
            for (std::size_t t = s + 1; t < j; ++t) {
                int b = wedges[s].second, d = wedges[t].second;
                if (!adjacent(b, d)) {
                    if (witness) {
                        witness->a = static_cast<int>(wedges[i].first >> 32);
                        witness->b = b;
                        witness->c = static_cast<int>(wedges[i].first & 0xffffffffu);
                        witness->d = d;
                    }
                    return false;
                }
            }
        i = j;
    }
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
SimplicialComplex::join_decomposition() const {
    const int n = num_vertices();
    if (n < 2) return std::nullopt;
    // Components of the complement graph, BFS over the unvisited list.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> unvisited;
    for (int v = 0; v < n; ++v) unvisited.push_back(v);
    int ncomp = 0;
    while (!unvisited.empty()) {
        int start = unvisited.front();
        std::queue<int> q;
        q.push(start);
        comp[static_cast<std::size_t>(start)] = ncomp;
        std::vector<int> alive;
        alive.reserve(unvisited.size());
        for (int v : unvisited)
            if (v != start) alive.push_back(v);
        unvisited.swap(alive);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            std::vector<int> still;
            still.reserve(unvisited.size());
            const auto& nb = adj_[static_cast<std::size_t>(u)];
            for (int x : unvisited) {
                if (!std::binary_search(nb.begin(), nb.end(), x)) {
                    comp[static_cast<std::size_t>(x)] = ncomp;
                    q.push(x);
                } else {
                    still.push_back(x);
                }
            }
            unvisited.swap(still);
        }
        ++ncomp;
    }
    if (ncomp < 2) return std::nullopt;
    std::vector<int> v1, v2;
    for (int v = 0; v < n; ++v)
        (comp[static_cast<std::size_t>(v)] == 0 ? v1 : v2).push_back(v);
    return std::make_pair(std::move(v1), std::move(v2));
}

namespace {

// Is the 1-complex given by (vertex list size, edges) a single cycle?
bool is_single_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 3 || static_cast<int>(edges.size()) != n) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (const auto& a : adj)
        if (a.size() != 2) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cur = 0, prev = -1, count = 0;
    while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        ++count;
        int nxt = adj[static_cast<std::size_t>(cur)][0] == prev
                      ? adj[static_cast<std::size_t>(cur)][1]
                      : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = nxt;
    }
    return count == n;
}

}  // namespace

int SimplicialComplex::closed_manifold_dim() const {
    const int d = dim_;
    if (d < 1 || d > 3) return -1;
    if (!is_connected()) return -1;
    for (const auto& m : maximal_)
        if (static_cast<int>(m.size()) - 1 != d) return -1;  // not pure

    if (d == 1) {
        for (int v = 0; v < num_vertices(); ++v)
            if (adj_[static_cast<std::size_t>(v)].size() != 2) return -1;
        return 1;
    }

    // Links of codimension-2 faces must be single cycles.
    for (const auto& f : faces_[static_cast<std::size_t>(d - 2)]) {
        SimplicialComplex lk = link(f);
        if (lk.dimension() != 1) return -1;
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : lk.faces(1)) edges.emplace_back(e[0], e[1]);
        if (!is_single_cycle(lk.num_vertices(), edges)) return -1;
    }
    if (d == 3) {
        // Vertex links must be closed connected surfaces with chi = 2.
        for (int v = 0; v < num_vertices(); ++v) {
            SimplicialComplex lk = link(Simplex{v});
            if (lk.closed_manifold_dim() != 2) return -1;
            if (lk.euler_characteristic() != 2) return -1;
        }
    }
    return d;
}

bool SimplicialComplex::is_orientable() const {
    const int d = closed_manifold_dim();
    if (d < 1) throw std::logic_error("is_orientable: not a closed manifold");
    if (d == 1) return true;

    // Facet adjacency via shared codimension-1 faces, then a coherent
    // orientation search. Facet stored sorted; orientation sign relative to
    // ascending vertex order. Removing position i from an ascending tuple
    // induces sign (-1)^i on the sorted face.
    const auto& facets = faces_[static_cast<std::size_t>(d)];
    std::unordered_map<Simplex, std::vector<std::pair<int, int>>, SimplexHash> by_face;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
        const auto& s = facets[static_cast<std::size_t>(fi)];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            by_face[sub].emplace_back(fi, static_cast<int>(i));
        }
    }
    std::vector<int> sign(facets.size(), 0);
    for (std::size_t start = 0; start < facets.size(); ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(start));
        while (!q.empty()) {
            int fi = q.front();
            q.pop();
            const auto& s = facets[static_cast<std::size_t>(fi)];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                const auto& inc = by_face.at(sub);
                if (inc.size() != 2) return false;
                for (auto [gj, j] : inc) {
                    if (gj == fi) continue;
                    // Coherence: induced orientations must be opposite.
                    int needed = -sign[static_cast<std::size_t>(fi)] *
                                 ((static_cast<std::size_t>(i) + static_cast<std::size_t>(j)) % 2 == 0 ? 1 : -1);
                    if (sign[static_cast<std::size_t>(gj)] == 0) {
                        sign[static_cast<std::size_t>(gj)] = needed;
                        q.push(gj);
                    } else if (sign[static_cast<std::size_t>(gj)] != needed) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace wallcert
