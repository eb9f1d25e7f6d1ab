#include "wallcert/classify.hpp"

#include <algorithm>

#include "wallcert/homology.hpp"

namespace wallcert {

nlohmann::json LimitSetVerdict::to_json() const {
    return {{"label", label}, {"params", params}, {"evidence", evidence}, {"caveats", caveats}};
}

namespace {

bool homology_of_sphere(const HomologyProfile& h, int d) {
    for (int k = 0; k <= 3; ++k) {
        const auto& g = h.h[static_cast<std::size_t>(k)];
        long want_rank = (k == 0 || k == d) ? 1 : 0;
        if (d == 0 && k == 0) want_rank = 2;
        if (g.rank != want_rank || !g.torsion.empty()) return false;
    }
    return true;
}

}  // namespace

LimitSetVerdict classify_limit_set(const SimplicialComplex& L, const nlohmann::json& tags) {
    LimitSetVerdict v;
    v.caveats.push_back(
        "labels follow from cited boundary theory for the certified nerve; computed facts "
        "cover only the input complex (manifold checks, orientability, homology, tags)");

    const int d = L.closed_manifold_dim();
    const HomologyProfile h = homology(L);

    if (d >= 1) {
        const bool orientable = L.is_orientable();
        const long chi = L.euler_characteristic();
        v.params = {{"manifold_dim", d}, {"orientable", orientable}, {"chi", chi}};
        v.evidence.push_back("closed connected " + std::to_string(d) + "-manifold triangulation");
        v.evidence.push_back(std::string(orientable ? "orientable" : "nonorientable") +
                             ", chi = " + std::to_string(chi));
        v.evidence.push_back("homology " + h.str());

        bool is_sphere = false;
        if (d == 1) {
            is_sphere = true;  // a closed connected 1-manifold is a circle
            v.evidence.push_back("closed connected curve, hence a circle");
        } else if (d == 2 && chi == 2) {
            is_sphere = true;
            v.evidence.push_back("chi = 2 surface, hence a 2-sphere");
        } else if (d == 3 && homology_of_sphere(h, 3) && tags.value("standard_sphere", false)) {
            is_sphere = true;
            v.caveats.push_back("S^3 recognition comes from the corpus tag, not a computation");
        }
        if (is_sphere) {
            v.label = "sphere S^" + std::to_string(d);
            v.params["d"] = d;
            return v;
        }

        if (d == 2 && !orientable && chi == 1) {
            v.label = "Pontryagin surface Pi_2";
            v.params["p"] = 2;
            v.evidence.push_back(
                "nonorientable chi = 1 surface is the projective plane; its tree of manifolds "
                "is the nonorientable Pontryagin sphere Pi_2");
            return v;
        }

        if (d == 3 && homology_of_sphere(h, 3)) {
            v.label = "Cech cohomology 3-sphere (non-standard candidate)";
            v.evidence.push_back("homology 3-sphere nerve");
            if (tags.value("nonstandard_homology_sphere", false))
                v.caveats.push_back(
                    "not homeomorphic to S^3 by the tagged provenance of the triangulation "
                    "(cited, not computed)");
            else
                v.caveats.push_back("standardness of the underlying 3-manifold undecided here");
            return v;
        }

        v.label = orientable ? "tree of manifolds X(N # N-bar)" : "tree of manifolds X(N)";
        if (orientable && d == 2)
            v.evidence.push_back("orientable positive-genus surface: the orientable Pontryagin sphere");
        if (homology_of_sphere(h, d))
            v.caveats.push_back(
                "N is a homology sphere; if N is the standard sphere the limit set is S^" +
                std::to_string(d));
        return v;
    }

    if (tags.contains("moore_space_p")) {
        const int p = tags["moore_space_p"].get<int>();
        const auto& h1 = h.h[1];
        const auto& h2 = h.h[2];
        if (h1.rank == 0 && h1.torsion == std::vector<long>{p} && h2.rank == 0 &&
            h2.torsion.empty()) {
            v.label = "Pontryagin surface Pi_" + std::to_string(p);
            v.params = {{"p", p}};
            v.evidence.push_back("validated Moore space M(Z/" + std::to_string(p) + ", 1)");
            v.evidence.push_back("homology " + h.str());
            if (p != 2 && p != 3 && p != 5)
                v.caveats.push_back("p is expected to be prime for the cited boundary result");
            return v;
        }
    }

    v.label = "unclassified";
    v.evidence.clear();
    v.params = {{"manifold", false}};
    v.caveats.push_back("no decision rule applies; homology " + h.str());
    return v;
}

nlohmann::json MengerReport::to_json() const {
    return {{"all_pass", all_pass}, {"vertex", chosen_vertex}, {"details", details}};
}

MengerReport menger_evidence(const SubdivisionMap& sub, const nlohmann::json& tags,
                             const std::string& vertex_label) {
    MengerReport rep;
    if (!tags.contains("core_vertices"))
        throw std::invalid_argument("menger_evidence: input has no core tag");
    std::vector<std::string> core = tags["core_vertices"].get<std::vector<std::string>>();

    int chosen = -1;
    if (!vertex_label.empty()) {
        if (std::find(core.begin(), core.end(), vertex_label) != core.end())
            throw std::invalid_argument("menger_evidence: chosen vertex lies on the core");
        chosen = sub.source.index_of(vertex_label);
    } else {
        // first level-0 vertex off the core, in source label order
        for (int s = 0; s < sub.source.num_vertices(); ++s) {
            if (std::find(core.begin(), core.end(), sub.source.label(s)) != core.end()) continue;
            chosen = s;
            break;
        }
    }
    if (chosen < 0) throw std::invalid_argument("menger_evidence: no vertex off the core");
    rep.chosen_vertex = sub.source.label(chosen);

    std::vector<int> keep;
    const int removed = sub.level0_vertex(chosen);
    for (int v = 0; v < sub.target.num_vertices(); ++v)
        if (v != removed) keep.push_back(v);
    SimplicialComplex K = sub.target.full_subcomplex(keep);

    const bool connected = K.is_connected();
    const bool join_free = !K.join_decomposition().has_value();
    const HomologyProfile h = homology(K);
    const bool circle_homology = h.h[0] == HomologyGroup{1, {}} && h.h[1] == HomologyGroup{1, {}} &&
                                 h.h[2] == HomologyGroup{0, {}} && h.h[3] == HomologyGroup{0, {}};

    // puncture sweep: every simplex deletion keeps H^k = 0 for k >= 2 and
    // keeps the complex connected
    std::uint64_t punctures = 0, cohomology_failures = 0, disconnections = 0;
    nlohmann::json witnesses = nlohmann::json::array();
    auto check_subcomplex = [&](const SimplicialComplex& c, const std::string& what) {
        HomologyProfile coh = cohomology(c);
        bool vanishes = true;
        for (int k = 2; k <= 3; ++k)
            if (coh.h[static_cast<std::size_t>(k)].rank != 0 ||
                !coh.h[static_cast<std::size_t>(k)].torsion.empty())
                vanishes = false;
        if (!vanishes) {
            ++cohomology_failures;
            if (witnesses.size() < 5)
                witnesses.push_back({{"type", "cohomology"}, {"deleted", what}});
        }
        if (!c.is_connected()) {
            ++disconnections;
            if (witnesses.size() < 5)
                witnesses.push_back({{"type", "disconnected"}, {"deleted", what}});
        }
    };
    check_subcomplex(K, "(empty simplex)");
    ++punctures;
    for (int dim = 0; dim <= K.dimension(); ++dim)
        for (const auto& f : K.faces(dim)) {
            std::vector<int> rest;
            for (int v = 0; v < K.num_vertices(); ++v)
                if (std::find(f.begin(), f.end(), v) == f.end()) rest.push_back(v);
            SimplicialComplex sc = K.full_subcomplex(rest);
            std::string what;
            for (int v : f) what += (what.empty() ? "" : ",") + K.label(v);
            check_subcomplex(sc, what);
            ++punctures;
        }

    rep.all_pass = connected && join_free && circle_homology && cohomology_failures == 0 &&
                   disconnections == 0;
    rep.details = {{"k_vertices", K.num_vertices()},
                   {"connected", connected},
                   {"join_free", join_free},
                   {"circle_homology", circle_homology},
                   {"homology", h.str()},
                   {"punctures_checked", punctures},
                   {"cohomology_failures", cohomology_failures},
                   {"disconnections", disconnections},
                   {"note",
                    "necessary-evidence checks only; non-planarity is not checked (cited "
                    "argument), and the full inseparability/pcd criterion is not reproduced"}};
    if (!witnesses.empty()) rep.details["witnesses"] = witnesses;
    return rep;
}

}  // namespace wallcert
