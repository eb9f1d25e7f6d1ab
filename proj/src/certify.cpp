#include "wallcert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "wallcert/json_io.hpp"
#include "wallcert/zphi.hpp"

namespace wallcert {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

nlohmann::json golden_report(const Golden& g) {
    return {{"value", golden_to_json(g)}, {"text", g.str()}, {"approx", g.to_double()}};
}

const Golden kOne(1);
const Golden kPhi = Golden::phi();

}  // namespace

nlohmann::json Certificate::to_json() const {
    return {{"check", check},
            {"verdict", pass ? "pass" : "fail"},
            {"details", details},
            {"elapsed_ms", elapsed_ms}};
}

nlohmann::json certificates_to_json(const std::vector<Certificate>& certs) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& c : certs) {
        arr.push_back(c.to_json());
        all = all && c.pass;
    }
    return {{"certificates", arr}, {"all_pass", all}};
}

Certificate certify_signature(int n) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "signature";
    auto form = bn_form(n);
    auto minors = form.matrix.leading_principal_minors();

    std::string minor_signs, pivot_signs;
    int changes = 0, negative_pivots = 0, positive_pivots = 0;
    int prev = 1;  // sign of the empty minor
    bool nonzero = true;
    for (const auto& m : minors) {
        int s = m.sign();
        if (s == 0) nonzero = false;
        minor_signs += s > 0 ? '+' : (s < 0 ? '-' : '0');
        if (s != 0 && s != prev) ++changes;
        int pivot = s * prev;
        pivot_signs += pivot > 0 ? '+' : (pivot < 0 ? '-' : '0');
        (pivot > 0 ? positive_pivots : negative_pivots) += pivot != 0 ? 1 : 0;
        if (s != 0) prev = s;
    }
    bool minors_ok = nonzero && changes == 1 && positive_pivots == n && negative_pivots == 1;

    // (n-1)-fold eigenrelation with eigenvalue 1+phi
    bool eigen_ok = true;
    for (int i = 0; i + 1 < n; ++i) {
        GoldenVector v(static_cast<std::size_t>(n + 1));
        v[static_cast<std::size_t>(i)] = kOne;
        v[static_cast<std::size_t>(i + 1)] = -kOne;
        if (form.matrix.apply(v) != v.scaled(kOne + kPhi)) eigen_ok = false;
    }

    // restriction to span(sum e_i, e_{n+1}) is an indefinite plane
    GoldenVector u(static_cast<std::size_t>(n + 1)), w(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = kOne;
    w[static_cast<std::size_t>(n)] = kOne;
    Golden det2 = form.inner(u, u) * form.inner(w, w) - form.inner(u, w) * form.inner(w, u);
    bool plane_ok = det2.sign() < 0;

    cert.pass = minors_ok && eigen_ok && plane_ok;
    cert.details = {{"n", n},
                    {"minor_signs", minor_signs},
                    {"pivot_signs", pivot_signs},
                    {"sign_changes", changes},
                    {"eigenrelation_1_plus_phi", eigen_ok},
                    {"restricted_plane_det", golden_report(det2)}};
    if (!cert.pass) {
        cert.details["witnesses"] = nlohmann::json::array(
            {{{"minors_ok", minors_ok}, {"eigen_ok", eigen_ok}, {"plane_ok", plane_ok}}});
    }
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate certify_galois_positive(int n) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "galois_positive";
    auto form = bn_form(n);
    GoldenMatrix conj(form.matrix.rows(), form.matrix.cols());
    for (std::size_t i = 0; i < conj.rows(); ++i)
        for (std::size_t j = 0; j < conj.cols(); ++j) conj.at(i, j) = form.matrix.at(i, j).conj();
    auto minors = conj.leading_principal_minors();
    bool all_positive = true;
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& m : minors) {
        signs.push_back(m.sign());
        if (m.sign() <= 0) all_positive = false;
    }
    cert.pass = all_positive;
    cert.details = {{"n", n}, {"minor_signs", signs}};
    if (!cert.pass) cert.details["witnesses"] = nlohmann::json::array({{{"minor_signs", signs}}});
    cert.elapsed_ms = ms_since(start);
    return cert;
}

namespace {

struct PackedVertex {
    ZPhi sum;                               // S(x), all n+1 coordinates
    std::vector<std::pair<int, ZPhi>> sup;  // nonzero coordinates among 0..n-1
};

// -phi Sx Sy + (1+phi) * sum over shared support
ZPhi packed_inner(const PackedVertex& x, const PackedVertex& y) {
    ZPhi t{0, 0};
    auto a = x.sup.begin(), b = y.sup.begin();
    while (a != x.sup.end() && b != y.sup.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else {
            t = t + a->second * b->second;
            ++a;
            ++b;
        }
    }
    return t + mul_phi(t) - mul_phi(x.sum * y.sum);
}

bool pack_assignment(const VectorAssignment& va, std::vector<PackedVertex>& out) {
    const std::size_t dim = static_cast<std::size_t>(va.n + 1);
    out.clear();
    out.reserve(va.vectors.size());
    for (const auto& vec : va.vectors) {
        PackedVertex pv;
        ZPhi s{0, 0};
        for (std::size_t i = 0; i < dim; ++i) {
            auto z = ZPhi::from_golden(vec[i]);
            if (!z) return false;
            s = s + *z;
            if (i + 1 < dim && !z->is_zero()) pv.sup.emplace_back(static_cast<int>(i), *z);
        }
        pv.sum = s;
        out.push_back(std::move(pv));
    }
    return true;
}

struct SweepState {
    std::uint64_t pairs = 0, adjacent = 0, nonadjacent = 0;
    bool has_worst = false;
    ZPhi worst{0, 0};
    int worst_u = -1, worst_v = -1;
    nlohmann::json witnesses = nlohmann::json::array();
    std::uint64_t failures = 0;

    void note_nonadjacent(ZPhi inner, int u, int v) {
        ++nonadjacent;
        if (!has_worst || (inner - worst).sign() > 0) {
            has_worst = true;
            worst = inner;
            worst_u = u;
            worst_v = v;
        }
    }
};

void merge_sweep(SweepState& into, const SweepState& from) {
    into.pairs += from.pairs;
    into.adjacent += from.adjacent;
    into.nonadjacent += from.nonadjacent;
    into.failures += from.failures;
    for (const auto& w : from.witnesses)
        if (into.witnesses.size() < 8) into.witnesses.push_back(w);
    if (from.has_worst) {
        if (!into.has_worst) {
            into.has_worst = true;
            into.worst = from.worst;
            into.worst_u = from.worst_u;
            into.worst_v = from.worst_v;
        } else {
            int cmp = (from.worst - into.worst).sign();
            if (cmp > 0 || (cmp == 0 && std::make_pair(from.worst_u, from.worst_v) <
                                            std::make_pair(into.worst_u, into.worst_v))) {
                into.worst = from.worst;
                into.worst_u = from.worst_u;
                into.worst_v = from.worst_v;
            }
        }
    }
}

}  // namespace

Certificate certify_nerve(const SubdivisionMap& sub, const VectorAssignment& va, int workers) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "nerve";
    const SimplicialComplex& target = sub.target;
    const int V = target.num_vertices();
    if (static_cast<int>(va.vectors.size()) != V) {
        cert.details = {{"witnesses", nlohmann::json::array({"assignment size mismatch"})}};
        cert.elapsed_ms = ms_since(start);
        return cert;
    }

    std::vector<PackedVertex> packed;
    if (!pack_assignment(va, packed)) {
        cert.details = {{"witnesses",
                         nlohmann::json::array({"assignment has non-integral or oversized "
                                                "coefficients"})}};
        cert.elapsed_ms = ms_since(start);
        return cert;
    }

    // diagonal pass
    nlohmann::json diag_witnesses = nlohmann::json::array();
    for (int v = 0; v < V; ++v) {
        ZPhi norm = packed_inner(packed[static_cast<std::size_t>(v)],
                                 packed[static_cast<std::size_t>(v)]);
        if (norm != ZPhi::one() && diag_witnesses.size() < 8)
            diag_witnesses.push_back({{"type", "unit_norm"},
                                      {"vertex", target.label(v)},
                                      {"value", golden_report(norm.to_golden())}});
    }

    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    workers = std::min<int>(workers, std::max(1, V));

    // contiguous row ranges with balanced pair counts
    std::vector<int> cut(static_cast<std::size_t>(workers) + 1, V);
    cut[0] = 0;
    const double total_pairs = static_cast<double>(V) * (V - 1) / 2.0;
    for (int w = 1; w < workers; ++w) {
        // find row r so that pairs in [0, r) is about w/workers of the total
        double want = total_pairs * w / workers;
        double lo = 0, hi = V;
        while (hi - lo > 0.5) {
            double mid = (lo + hi) / 2;
            double have = mid * V - mid * (mid + 1) / 2;
            (have < want ? lo : hi) = mid;
        }
        cut[static_cast<std::size_t>(w)] = std::min(V, static_cast<int>(hi));
    }
    for (int w = 1; w <= workers; ++w)
        cut[static_cast<std::size_t>(w)] =
            std::max(cut[static_cast<std::size_t>(w)], cut[static_cast<std::size_t>(w - 1)]);

    std::vector<SweepState> states(static_cast<std::size_t>(workers));
    auto run_range = [&](int lo, int hi, SweepState& st) {
        std::vector<char> is_neighbor(static_cast<std::size_t>(V), 0);
        for (int u = lo; u < hi; ++u) {
            for (int w : target.neighbors(u)) is_neighbor[static_cast<std::size_t>(w)] = 1;
            const PackedVertex& pu = packed[static_cast<std::size_t>(u)];
            for (int v = u + 1; v < V; ++v) {
                ++st.pairs;
                ZPhi inner = packed_inner(pu, packed[static_cast<std::size_t>(v)]);
                if (is_neighbor[static_cast<std::size_t>(v)]) {
                    ++st.adjacent;
                    if (!inner.is_zero()) {
                        ++st.failures;
                        if (st.witnesses.size() < 8)
                            st.witnesses.push_back(
                                {{"type", "adjacent_nonzero"},
                                 {"pair", {target.label(u), target.label(v)}},
                                 {"value", golden_report(inner.to_golden())}});
                    }
                } else {
                    st.note_nonadjacent(inner, u, v);
                    if ((inner + ZPhi::phi()).sign() > 0) {
                        ++st.failures;
                        if (st.witnesses.size() < 8)
                            st.witnesses.push_back(
                                {{"type", "nonadjacent_above_bound"},
                                 {"pair", {target.label(u), target.label(v)}},
                                 {"value", golden_report(inner.to_golden())}});
                    }
                }
            }
            for (int w : target.neighbors(u)) is_neighbor[static_cast<std::size_t>(w)] = 0;
        }
    };

    if (workers == 1) {
        run_range(0, V, states[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_range, cut[static_cast<std::size_t>(w)],
                              cut[static_cast<std::size_t>(w) + 1],
                              std::ref(states[static_cast<std::size_t>(w)]));
        for (auto& t : pool) t.join();
    }

    SweepState total;
    for (const auto& st : states) merge_sweep(total, st);

    cert.pass = total.failures == 0 && diag_witnesses.empty();
    cert.details = {{"vertices", V},
                    {"pairs_checked", total.pairs},
                    {"adjacent_pairs", total.adjacent},
                    {"nonadjacent_pairs", total.nonadjacent}};
    if (total.has_worst) {
        cert.details["worst_nonadjacent"] = golden_report(total.worst.to_golden());
        cert.details["worst_pair"] = {target.label(total.worst_u), target.label(total.worst_v)};
        cert.details["worst_equals_minus_phi"] = (total.worst.to_golden() == -kPhi);
    }
    nlohmann::json witnesses = diag_witnesses;
    for (const auto& w : total.witnesses)
        if (witnesses.size() < 8) witnesses.push_back(w);
    if (!witnesses.empty()) cert.details["witnesses"] = witnesses;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

namespace {

using ZMatrix = std::vector<std::vector<ZPhi>>;

ZMatrix zphi_identity(int dim) {
    ZMatrix m(static_cast<std::size_t>(dim), std::vector<ZPhi>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ZPhi::one();
    return m;
}

ZMatrix zphi_mul(const ZMatrix& x, const ZMatrix& y) {
    const std::size_t n = x.size();
    ZMatrix r(n, std::vector<ZPhi>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            ZPhi xik = x[i][k];
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + xik * y[k][j];
        }
    return r;
}

}  // namespace

Certificate certify_lattice_membership(const SubdivisionMap& sub, const VectorAssignment& va) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "lattice_membership";
    const SimplicialComplex& target = sub.target;
    const int V = target.num_vertices();
    const int dim = va.n + 1;

    std::vector<PackedVertex> packed;
    nlohmann::json witnesses = nlohmann::json::array();

    // integrality gate, reported per vertex rather than thrown
    for (int v = 0; v < V && witnesses.size() < 8; ++v)
        if (!va.vectors[static_cast<std::size_t>(v)].is_integral())
            witnesses.push_back({{"type", "non_integral"}, {"vertex", target.label(v)}});
    if (!witnesses.empty() || !pack_assignment(va, packed)) {
        if (witnesses.empty()) witnesses.push_back("oversized coefficients");
        cert.details = {{"witnesses", witnesses}};
        cert.elapsed_ms = ms_since(start);
        return cert;
    }

    // B as a packed matrix
    ZMatrix B(static_cast<std::size_t>(dim), std::vector<ZPhi>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (i == j && i < va.n) ? ZPhi::one() : -ZPhi::phi();
    const ZMatrix eye = zphi_identity(dim);

    std::uint64_t checked = 0;
    for (int v = 0; v < V; ++v) {
        const PackedVertex& pv = packed[static_cast<std::size_t>(v)];
        // dense coordinates
        std::vector<ZPhi> x(static_cast<std::size_t>(dim));
        for (const auto& [i, c] : pv.sup) x[static_cast<std::size_t>(i)] = c;
        {
            ZPhi rest = pv.sum;
            for (const auto& [i, c] : pv.sup) rest = rest - c;
            x[static_cast<std::size_t>(dim - 1)] = rest;  // the only coordinate outside sup
        }
        // b = B x using the rank-structure of B
        std::vector<ZPhi> b(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            ZPhi t = -mul_phi(pv.sum);
            if (i < va.n) t = t + mul_one_plus_phi(x[static_cast<std::size_t>(i)]);
            b[static_cast<std::size_t>(i)] = t;
        }
        ZMatrix R = zphi_identity(dim);
        for (int i = 0; i < dim; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            ZPhi xi2 = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(i)];
            for (int j = 0; j < dim; ++j)
                R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    xi2 * b[static_cast<std::size_t>(j)];
        }
        bool rr_ok = zphi_mul(R, R) == eye;
        // R^T B R: transpose in place of the first factor
        ZMatrix Rt(static_cast<std::size_t>(dim), std::vector<ZPhi>(static_cast<std::size_t>(dim)));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                Rt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    R[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        bool form_ok = zphi_mul(Rt, zphi_mul(B, R)) == B;
        // timelike probe t = e_{n+1}: inner(t, R t) = -phi * S(R t)
        ZPhi s_rt{0, 0};
        for (int i = 0; i < dim; ++i)
            s_rt = s_rt + R[static_cast<std::size_t>(i)][static_cast<std::size_t>(dim - 1)];
        bool probe_ok = (-mul_phi(s_rt)).sign() < 0;
        ++checked;
        if (!(rr_ok && form_ok && probe_ok) && witnesses.size() < 8)
            witnesses.push_back({{"type", "reflection_identity"},
                                 {"vertex", target.label(v)},
                                 {"involution", rr_ok},
                                 {"preserves_form", form_ok},
                                 {"timelike_probe", probe_ok}});
    }

    cert.pass = witnesses.empty();
    cert.details = {{"generators_checked", checked},
                    {"ambient_dim", dim},
                    {"probe", "e_" + std::to_string(dim)}};
    if (!witnesses.empty()) cert.details["witnesses"] = witnesses;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate certify_zariski(const SubdivisionMap& sub, const VectorAssignment& va) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "zariski_density";
    nlohmann::json witnesses = nlohmann::json::array();

    const int d = sub.source.dimension();
    bool dim_ok = d >= 1;
    if (!dim_ok) witnesses.push_back({{"type", "dimension_zero"}, {"dim", d}});

    auto join = sub.target.join_decomposition();
    bool join_ok = !join.has_value();
    if (!join_ok) {
        nlohmann::json side = nlohmann::json::array();
        for (int v : join->first)
            if (side.size() < 12) side.push_back(sub.target.label(v));
        witnesses.push_back({{"type", "join"}, {"side", side}});
    }

    // exact rank of the wall vectors over Q(sqrt5)
    const std::size_t dim_amb = static_cast<std::size_t>(va.n + 1);
    std::vector<GoldenVector> pivots;      // echelon rows, leading 1
    std::vector<std::size_t> pivot_cols;
    for (const auto& vec : va.vectors) {
        if (pivots.size() == dim_amb) break;
        GoldenVector r = vec;
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            const Golden& c = r[pivot_cols[p]];
            if (c.is_zero()) continue;
            Golden f = c;
            for (std::size_t j = 0; j < dim_amb; ++j) r[j] -= f * pivots[p][j];
        }
        std::size_t lead = dim_amb;
        for (std::size_t j = 0; j < dim_amb; ++j)
            if (!r[j].is_zero()) { lead = j; break; }
        if (lead == dim_amb) continue;
        Golden inv = r[lead].inverse();
        for (std::size_t j = 0; j < dim_amb; ++j) r[j] *= inv;
        pivots.push_back(std::move(r));
        pivot_cols.push_back(lead);
    }
    bool rank_ok = pivots.size() == dim_amb;
    if (!rank_ok)
        witnesses.push_back({{"type", "rank_deficit"},
                             {"rank", pivots.size()},
                             {"needed", dim_amb}});

    bool last_ok = false;
    std::string last_witness;
    for (std::size_t v = 0; v < va.vectors.size() && !last_ok; ++v)
        if (!va.vectors[v][dim_amb - 1].is_zero()) {
            last_ok = true;
            last_witness = sub.target.label(static_cast<int>(v));
        }
    if (!last_ok) witnesses.push_back({{"type", "no_last_coordinate"}});

    cert.pass = dim_ok && join_ok && rank_ok && last_ok;
    cert.details = {{"source_dimension", d},
                    {"join_free", join_ok},
                    {"rank", pivots.size()},
                    {"ambient_dim", dim_amb},
                    {"last_coordinate_witness", last_witness}};
    if (!witnesses.empty()) cert.details["witnesses"] = witnesses;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

namespace {

Golden sq_sum(const CoefficientRow& row, const std::vector<int>& slots) {
    Golden s;
    for (int i : slots) s += row.c[static_cast<std::size_t>(i)] * row.c[static_cast<std::size_t>(i)];
    return s;
}

std::vector<std::vector<int>> slot_choices(int k) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (k == 2) out.push_back({a, b});
            else
                for (int c = b + 1; c < 4; ++c) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace

bool cauchy_schwarz_bound_holds(const Golden& S, const Golden& Sp, const Golden& A,
                                const Golden& Ap) {
    Golden rhs = kPhi * S * Sp - kPhi;
    if (rhs.sign() < 0) return false;
    Golden lhs_sq = (kOne + kPhi) * (kOne + kPhi) * A * Ap;
    return (lhs_sq - rhs * rhs).sign() <= 0;
}

Certificate exhaustive_case_checks() {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "exhaustive_cases";
    const auto& table = coefficient_table();
    nlohmann::json witnesses = nlohmann::json::array();

    // case 1: every row sum is at least 1
    int case1_rows = 0;
    for (const auto& row : table) {
        ++case1_rows;
        if ((row.sum() - kOne).sign() < 0)
            witnesses.push_back({{"type", "case1_sum_below_one"}, {"sum", row.sum().str()}});
    }

    // case 2: phi * c <= S for rows of level >= 1, every nonzero
    // coefficient >= 1 in every row
    int case2_rows = 0;
    for (const auto& row : table) {
        for (const auto& c : row.c)
            if (!c.is_zero() && (c - kOne).sign() < 0)
                witnesses.push_back({{"type", "coefficient_below_one"}, {"row_sum", row.sum().str()}});
        if (row.level < 1) continue;
        ++case2_rows;
        if ((row.sum() - kPhi * row.c[0]).sign() < 0)
            witnesses.push_back({{"type", "case2_violation"}, {"row_sum", row.sum().str()}});
    }

    // cases 3 and 4
    auto run_case = [&](int shared, int min_level, const std::string& name, int& pairs_out,
                        bool& extremal_out, int& equality_out) {
        std::vector<const CoefficientRow*> rows;
        for (const auto& row : table)
            if (row.level >= min_level) rows.push_back(&row);
        const auto choices = slot_choices(shared);
        const std::vector<int> lead_slots = choices.front();  // the two/three largest coefficients
        int pairs = 0, equalities = 0;
        bool extremal = true;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i; j < rows.size(); ++j) {
                ++pairs;
                const Golden S = rows[i]->sum(), Sp = rows[j]->sum();
                const Golden A = sq_sum(*rows[i], lead_slots), Ap = sq_sum(*rows[j], lead_slots);
                if (!cauchy_schwarz_bound_holds(S, Sp, A, Ap))
                    witnesses.push_back({{"type", name + "_violation"},
                                         {"rows", {rows[i]->sum().str(), rows[j]->sum().str()}}});
                Golden rhs = kPhi * S * Sp - kPhi;
                if (((kOne + kPhi) * (kOne + kPhi) * A * Ap - rhs * rhs).is_zero()) ++equalities;
                // every slotting must pass, and the leading slotting must be extremal
                Golden max_prod = A * Ap;
                for (const auto& ca : choices)
                    for (const auto& cb : choices) {
                        Golden Aa = sq_sum(*rows[i], ca), Ab = sq_sum(*rows[j], cb);
                        if (!cauchy_schwarz_bound_holds(S, Sp, Aa, Ab))
                            witnesses.push_back({{"type", name + "_slotting_violation"},
                                                 {"rows", {rows[i]->sum().str(), rows[j]->sum().str()}}});
                        if ((Aa * Ab - max_prod).sign() > 0) extremal = false;
                    }
            }
        pairs_out = pairs;
        extremal_out = extremal;
        equality_out = equalities;
    };

    int case3_pairs = 0, case4_pairs = 0, case3_eq = 0, case4_eq = 0;
    bool case3_extremal = false, case4_extremal = false;
    run_case(2, 2, "case3", case3_pairs, case3_extremal, case3_eq);
    run_case(3, 3, "case4", case4_pairs, case4_extremal, case4_eq);

    cert.pass = witnesses.empty() && case3_pairs == 78 && case4_pairs == 66;
    cert.details = {{"case1_rows", case1_rows},
                    {"case2_rows", case2_rows},
                    {"case3_pairs", case3_pairs},
                    {"case4_pairs", case4_pairs},
                    {"case3_bound_equalities", case3_eq},
                    {"case4_bound_equalities", case4_eq},
                    {"leading_slotting_extremal_case3", case3_extremal},
                    {"leading_slotting_extremal_case4", case4_extremal}};
    if (!witnesses.empty()) cert.details["witnesses"] = witnesses;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate certify_flag_no_square(const SimplicialComplex& complex) {
    auto start = Clock::now();
    Certificate cert;
    cert.check = "flag_no_square";
    SimplicialComplex::SquareWitness w;
    bool flag = complex.is_flag();
    bool ok = flag && complex.is_flag_no_square(&w);
    cert.pass = ok;
    cert.details = {{"vertices", complex.num_vertices()},
                    {"edges", complex.faces(1).size()},
                    {"is_flag", flag}};
    if (!ok) {
        nlohmann::json witness;
        if (!flag) witness = {{"type", "not_flag"}};
        else
            witness = {{"type", "induced_square"},
                       {"cycle",
                        {complex.label(w.a), complex.label(w.b), complex.label(w.c),
                         complex.label(w.d)}}};
        cert.details["witnesses"] = nlohmann::json::array({witness});
    }
    cert.elapsed_ms = ms_since(start);
    return cert;
}

PipelineResult certify_pipeline(const SimplicialComplex& L, PipelineOptions opt) {
    PipelineResult res;
    res.n = opt.n < 0 ? L.num_vertices() : opt.n;
    res.sub = ps_subdivide(L);
    res.assignment = assign_vectors(res.sub, res.n);
    auto selected = [&](const std::string& name) {
        return opt.checks.empty() ||
               std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
    };
    if (selected("signature")) res.certificates.push_back(certify_signature(res.n));
    if (selected("galois_positive")) res.certificates.push_back(certify_galois_positive(res.n));
    if (selected("nerve"))
        res.certificates.push_back(certify_nerve(res.sub, res.assignment, opt.workers));
    if (selected("lattice_membership"))
        res.certificates.push_back(certify_lattice_membership(res.sub, res.assignment));
    if (selected("zariski_density"))
        res.certificates.push_back(certify_zariski(res.sub, res.assignment));
    if (selected("flag_no_square"))
        res.certificates.push_back(certify_flag_no_square(res.sub.target));
    if (selected("exhaustive_cases")) res.certificates.push_back(exhaustive_case_checks());
    res.all_pass = !res.certificates.empty();
    for (const auto& c : res.certificates) res.all_pass = res.all_pass && c.pass;
    return res;
}

}  // namespace wallcert
