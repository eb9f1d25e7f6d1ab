#include "wallcert/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "wallcert/polytope600.hpp"

namespace wallcert {

namespace {
const Golden kOne(1);
const Golden kPhi = Golden::phi();
}  // namespace

Golden LorentzForm::inner(const GoldenVector& x, const GoldenVector& y) const {
    if (static_cast<int>(x.size()) != n + 1 || static_cast<int>(y.size()) != n + 1)
        throw std::invalid_argument("LorentzForm::inner: length mismatch");
    Golden sx, sy, dot;
    for (int i = 0; i <= n; ++i) {
        sx += x[static_cast<std::size_t>(i)];
        sy += y[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero() || y[static_cast<std::size_t>(i)].is_zero())
            continue;
        dot += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    }
    return -kPhi * sx * sy + (kOne + kPhi) * dot;
}

LorentzForm bn_form(int n) {
    if (n < 2) throw std::invalid_argument("bn_form: n must be >= 2");
    LorentzForm f;
    f.n = n;
    f.matrix = GoldenMatrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            f.matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                (i == j && i < n) ? kOne : -kPhi;
    return f;
}

const GMatrix& build_g() {
    static const GMatrix gm = [] {
        const Golden m1(-1), zero(0), two(2);
        const Golden rows[5][5] = {
            {-kPhi, m1, kOne - kPhi, zero, kPhi},
            {-kPhi, m1, kPhi - kOne, zero, kPhi},
            {m1, -kPhi, zero, kOne - kPhi, kPhi},
            {m1, -kPhi, zero, kPhi - kOne, kPhi},
            {two, two, zero, zero, kOne - two * kPhi},
        };
        GMatrix out;
        out.g = GoldenMatrix(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) out.g.at(i, j) = rows[i][j];
        const GoldenMatrix b4 = bn_form(4).matrix;
        GoldenMatrix d = out.g.transpose() * b4 * out.g;
        // d must be diag(2,2,2,2,-phi); invert it entrywise
        GoldenMatrix d_inv(5, 5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j)
                if (i != j && !d.at(i, j).is_zero())
                    throw std::logic_error("build_g: g^T B_4 g is not diagonal");
            d_inv.at(i, i) = d.at(i, i).inverse();
        }
        const Golden expect_diag[5] = {two, two, two, two, -kPhi};
        for (std::size_t i = 0; i < 5; ++i)
            if (d.at(i, i) != expect_diag[i])
                throw std::logic_error("build_g: unexpected diagonal");
        out.g_inv = d_inv * out.g.transpose() * b4;
        if (out.g * out.g_inv != GoldenMatrix::identity(5))
            throw std::logic_error("build_g: inverse check failed");
        return out;
    }();
    return gm;
}

namespace {

GoldenVector unit5(int slot, const Golden& value) {
    GoldenVector v(5);
    v[static_cast<std::size_t>(slot)] = value;
    return v;
}

CanonicalBlock make_canonical_block() {
    const Polytope600& P = the_600cell();
    const GMatrix& gm = build_g();
    const Golden phi_m2 = kPhi - Golden(2);  // -(2 - phi)

    CanonicalBlock B;
    B.local_of_cell.assign(120, -1);
    B.tau = {-1, -1, -1, -1};

    struct Classified {
        BlockVertex bv;
        bool is_tau = false;
        int tau_slot = -1;
    };
    std::vector<Classified> cls(120);

    for (int p = 0; p < 120; ++p) {
        // x_p = phi * g * (z_p, 1)
        GoldenVector z1(5);
        for (std::size_t t = 0; t < 4; ++t) z1[t] = P.vertices[static_cast<std::size_t>(p)][t];
        z1[4] = kOne;
        GoldenVector x = gm.g.apply(z1).scaled(kPhi);
        if (!x.is_integral())
            throw std::logic_error("canonical block: non-integral wall vector");

        Classified& c = cls[static_cast<std::size_t>(p)];
        c.bv.coords = x;
        c.bv.cell_vertex = p;

        bool matched = false;
        for (int m = 0; m < 4 && !matched; ++m) {
            GoldenVector t(5);
            t[static_cast<std::size_t>(m)] = kOne - kPhi;
            t[4] = kPhi - kOne;
            if (x == t) {
                c.is_tau = true;
                c.tau_slot = m;
                matched = true;
            }
        }
        for (int m = 0; m < 4 && !matched; ++m)
            if (x == unit5(m, kOne)) {
                c.bv.level = 0;
                c.bv.corner = m;
                matched = true;
            }
        for (int a = 0; a < 4 && !matched; ++a)
            for (int b = a + 1; b < 4 && !matched; ++b) {
                GoldenVector t(5);
                t[static_cast<std::size_t>(a)] = kOne;
                t[static_cast<std::size_t>(b)] = kOne;
                t[4] = phi_m2;
                if (x == t) {
                    c.bv.level = 1;
                    c.bv.edge = {a, b};
                    matched = true;
                }
            }
        // level 2: phi at the apex slot, 1 at two other slots, -1 last
        for (int apex = 0; apex < 4 && !matched; ++apex)
            for (int b = 0; b < 4 && !matched; ++b)
                for (int cslot = b + 1; cslot < 4 && !matched; ++cslot) {
                    if (b == apex || cslot == apex) continue;
                    GoldenVector t(5);
                    t[static_cast<std::size_t>(apex)] = kPhi;
                    t[static_cast<std::size_t>(b)] = kOne;
                    t[static_cast<std::size_t>(cslot)] = kOne;
                    t[4] = -kOne;
                    if (x == t) {
                        c.bv.level = 2;
                        c.bv.apex = apex;
                        c.bv.others = {b, cslot};
                        matched = true;
                    }
                }
        if (!matched) c.bv.level = 3;  // interior; validated against the table elsewhere
    }

    // tau must be exactly four vertices, one per slot, pairwise adjacent.
    int tau_count = 0;
    for (int p = 0; p < 120; ++p)
        if (cls[static_cast<std::size_t>(p)].is_tau) {
            int m = cls[static_cast<std::size_t>(p)].tau_slot;
            if (B.tau[static_cast<std::size_t>(m)] != -1)
                throw std::logic_error("canonical block: duplicate tau slot");
            B.tau[static_cast<std::size_t>(m)] = p;
            ++tau_count;
        }
    if (tau_count != 4) throw std::logic_error("canonical block: tau is not four vertices");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!P.adjacent(B.tau[static_cast<std::size_t>(a)], B.tau[static_cast<std::size_t>(b)]))
                throw std::logic_error("canonical block: tau vertices not pairwise adjacent");

    // deterministic local order: corners, edges, triangle vertices, interior
    std::vector<int> order;
    for (int lvl = 0; lvl <= 3; ++lvl)
        for (int p = 0; p < 120; ++p) {
            const Classified& c = cls[static_cast<std::size_t>(p)];
            if (c.is_tau || c.bv.level != lvl) continue;
            order.push_back(p);
        }
    auto sort_key = [&](int p) {
        const BlockVertex& v = cls[static_cast<std::size_t>(p)].bv;
        switch (v.level) {
            case 0: return std::array<int, 4>{0, v.corner, 0, p};
            case 1: return std::array<int, 4>{1, v.edge[0], v.edge[1], p};
            case 2: return std::array<int, 4>{2, v.apex, v.others[0] * 4 + v.others[1], p};
            default: return std::array<int, 4>{3, p, 0, 0};
        }
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sort_key(a) < sort_key(b); });
    for (int p : order) {
        B.local_of_cell[static_cast<std::size_t>(p)] = static_cast<int>(B.verts.size());
        B.verts.push_back(cls[static_cast<std::size_t>(p)].bv);
    }
    if (B.verts.size() != 116) throw std::logic_error("canonical block: expected 116 vertices");

    int counts[4] = {0, 0, 0, 0};
    for (const auto& v : B.verts) ++counts[v.level];
    if (counts[0] != 4 || counts[1] != 6 || counts[2] != 12 || counts[3] != 94)
        throw std::logic_error("canonical block: wrong level multiset");

    // restrict the 600-cell cliques to the block
    auto lc = [&](int p) { return B.local_of_cell[static_cast<std::size_t>(p)]; };
    for (const auto& [u, v] : P.edges)
        if (lc(u) >= 0 && lc(v) >= 0)
            B.edges.emplace_back(std::min(lc(u), lc(v)), std::max(lc(u), lc(v)));
    for (const auto& t : P.triangles)
        if (lc(t[0]) >= 0 && lc(t[1]) >= 0 && lc(t[2]) >= 0) {
            std::array<int, 3> m = {lc(t[0]), lc(t[1]), lc(t[2])};
            std::sort(m.begin(), m.end());
            B.triangles.push_back(m);
        }
    for (const auto& t : P.tetrahedra)
        if (lc(t[0]) >= 0 && lc(t[1]) >= 0 && lc(t[2]) >= 0 && lc(t[3]) >= 0) {
            std::array<int, 4> m = {lc(t[0]), lc(t[1]), lc(t[2]), lc(t[3])};
            std::sort(m.begin(), m.end());
            B.tetrahedra.push_back(m);
        }

    // unit-norm gate on all 116 block vectors
    const LorentzForm b4 = bn_form(4);
    for (const auto& v : B.verts)
        if (b4.inner(v.coords, v.coords) != kOne)
            throw std::logic_error("canonical block: wall vector is not a unit vector");
    return B;
}

}  // namespace

const CanonicalBlock& canonical_block() {
    static const CanonicalBlock B = make_canonical_block();
    return B;
}

VectorAssignment assign_vectors(const SubdivisionMap& sub, int n) {
    const int num_source = sub.source.num_vertices();
    if (n < num_source)
        throw std::invalid_argument("assign_vectors: ambient n is smaller than the vertex count");
    if (sub.source.dimension() > 3)
        throw std::invalid_argument("assign_vectors: source dimension exceeds 3");

    const CanonicalBlock& B = canonical_block();
    const LorentzForm form = bn_form(n);
    const std::size_t dim = static_cast<std::size_t>(n + 1);
    const std::size_t last = static_cast<std::size_t>(n);
    const Golden phi_m2 = kPhi - Golden(2);

    VectorAssignment va;
    va.n = n;
    va.vectors.reserve(sub.info.size());

    for (const VertexInfo& vi : sub.info) {
        GoldenVector x(dim);
        switch (vi.level) {
            case 0:
                x[static_cast<std::size_t>(vi.carrier[0])] = kOne;
                break;
            case 1:
                x[static_cast<std::size_t>(vi.carrier[0])] = kOne;
                x[static_cast<std::size_t>(vi.carrier[1])] = kOne;
                x[last] = phi_m2;
                break;
            case 2: {
                x[static_cast<std::size_t>(vi.role)] = kPhi;
                for (int v : vi.carrier)
                    if (v != vi.role) x[static_cast<std::size_t>(v)] = kOne;
                x[last] = -kOne;
                break;
            }
            case 3: {
                int local = B.local_of_cell[static_cast<std::size_t>(vi.role)];
                if (local < 0)
                    throw std::logic_error("assign_vectors: level-3 vertex mapped to tau");
                const GoldenVector& c = B.verts[static_cast<std::size_t>(local)].coords;
                for (std::size_t slot = 0; slot < 4; ++slot)
                    x[static_cast<std::size_t>(vi.carrier[slot])] = c[slot];
                x[last] = c[4];
                break;
            }
            default:
                throw std::logic_error("assign_vectors: bad level");
        }
        if (!x.is_integral())
            throw std::runtime_error("assign_vectors: non-integral coefficient");
        if (form.inner(x, x) != kOne)
            throw std::runtime_error("assign_vectors: wall vector is not a unit vector");
        va.vectors.push_back(std::move(x));
    }

    va.coeff_sum.reserve(va.vectors.size());
    va.support.reserve(va.vectors.size());
    for (const auto& x : va.vectors) {
        Golden s;
        std::vector<int> supp;
        for (std::size_t i = 0; i < dim; ++i) {
            s += x[i];
            if (i < last && !x[i].is_zero()) supp.push_back(static_cast<int>(i));
        }
        va.coeff_sum.push_back(std::move(s));
        va.support.push_back(std::move(supp));
    }
    return va;
}

GoldenMatrix reflection_matrix(const LorentzForm& form, const GoldenVector& x) {
    const std::size_t dim = static_cast<std::size_t>(form.n + 1);
    if (x.size() != dim) throw std::invalid_argument("reflection_matrix: dimension mismatch");
    GoldenVector b(dim);  // B x
    for (std::size_t i = 0; i < dim; ++i) {
        Golden s;
        for (std::size_t j = 0; j < dim; ++j) {
            if (x[j].is_zero()) continue;
            s += form.matrix.at(i, j) * x[j];
        }
        b[i] = s;
    }
    GoldenMatrix r = GoldenMatrix::identity(dim);
    const Golden two(2);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        Golden xi2 = two * x[i];
        for (std::size_t j = 0; j < dim; ++j) r.at(i, j) -= xi2 * b[j];
    }
    return r;
}

GoldenMatrix ReflectionGenerators::matrix(int v) const {
    return reflection_matrix(*form, assignment->vectors[static_cast<std::size_t>(v)]);
}

ReflectionGenerators reflection_generators(const LorentzForm& form, const VectorAssignment& va,
                                           const SimplicialComplex& nerve) {
    ReflectionGenerators gen;
    gen.form = &form;
    gen.assignment = &va;
    gen.nerve = &nerve;
    return gen;
}

Golden CoefficientRow::sum() const { return c[0] + c[1] + c[2] + c[3] + last; }

const std::vector<CoefficientRow>& coefficient_table() {
    static const std::vector<CoefficientRow> table = [] {
        const Golden o(1), z(0), phi = kPhi;
        auto G = [&](long a, long b) { return Golden(mpq_class(a), mpq_class(b)); };
        std::vector<CoefficientRow> t;
        t.push_back({0, {o, z, z, z}, z, 4});
        t.push_back({1, {o, o, z, z}, G(-2, 1), 6});
        t.push_back({2, {phi, o, o, z}, -o, 12});
        t.push_back({3, {G(1, 1), phi, o, o}, G(-2, 0), 12});
        t.push_back({3, {G(1, 1), G(1, 1), phi, o}, G(-1, -1), 12});
        t.push_back({3, {G(1, 1), G(1, 1), G(1, 1), o}, G(-3, 0), 4});
        t.push_back({3, {G(2, 1), G(1, 1), G(1, 1), phi}, G(-2, -1), 12});
        t.push_back({3, {G(1, 2), G(1, 1), G(1, 1), G(1, 1)}, G(-1, -2), 4});
        t.push_back({3, {G(1, 2), G(2, 1), G(1, 1), G(1, 1)}, G(-3, -1), 12});
        t.push_back({3, {G(1, 2), G(1, 2), G(2, 1), G(1, 1)}, G(-2, -2), 12});
        t.push_back({3, {G(2, 2), G(1, 2), G(1, 2), G(2, 1)}, G(-3, -2), 12});
        t.push_back({3, {G(2, 2), G(2, 2), G(1, 2), G(1, 2)}, G(-2, -3), 6});
        t.push_back({3, {G(2, 2), G(2, 2), G(2, 2), G(1, 2)}, G(-4, -2), 4});
        t.push_back({3, {G(1, 3), G(2, 2), G(2, 2), G(2, 2)}, G(-3, -3), 4});
        return t;
    }();
    return table;
}

}  // namespace wallcert
