// wallcert: build and certify right-angled reflection-group wall systems
// from golden-ratio subdivisions of small simplicial complexes.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallcert/certify.hpp"
#include "wallcert/classify.hpp"
#include "wallcert/complex.hpp"
#include "wallcert/construct.hpp"
#include "wallcert/corpus.hpp"
#include "wallcert/homology.hpp"
#include "wallcert/json_io.hpp"
#include "wallcert/polytope600.hpp"
#include "wallcert/subdivide.hpp"

using namespace wallcert;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct LoadedInput {
    std::string name;
    SimplicialComplex complex;
    nlohmann::json tags;
};

LoadedInput load_input(const std::string& source) {
    if (auto entry = corpus_get(source)) {
        return {entry->name, std::move(entry->complex), std::move(entry->tags)};
    }
    auto j = load_json_file(source);
    auto named = complex_from_json(j);
    return {named.name, std::move(named.complex), std::move(named.tags)};
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out_path, j);
}

std::string timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

nlohmann::json subdivision_json(const LoadedInput& in, const SubdivisionMap& sub) {
    nlohmann::json j = complex_to_json(sub.target, in.name + "_subdivided", in.tags);
    nlohmann::json ann = nlohmann::json::object();
    for (int v = 0; v < sub.target.num_vertices(); ++v) {
        const auto& vi = sub.info[static_cast<std::size_t>(v)];
        nlohmann::json carrier = nlohmann::json::array();
        for (int s : vi.carrier) carrier.push_back(sub.source.label(s));
        nlohmann::json entry = {{"carrier", carrier}, {"level", vi.level}};
        if (vi.level == 2) entry["role"] = sub.source.label(vi.role);
        if (vi.level == 3) entry["role"] = vi.role;
        ann[sub.target.label(v)] = std::move(entry);
    }
    j["annotations"] = std::move(ann);
    j["source"] = complex_to_json(sub.source, in.name, in.tags);
    return j;
}

int resolve_n(const LoadedInput& in, int n_flag) {
    if (n_flag < 0) return in.complex.num_vertices();
    if (n_flag < in.complex.num_vertices())
        throw CLI::ValidationError("--n", "must be at least the vertex count of the input");
    return n_flag;
}

nlohmann::json bundle_json(const LoadedInput& in, const PipelineResult& res) {
    nlohmann::json j = certificates_to_json(res.certificates);
    j["input"] = in.name;
    j["n"] = res.n;
    j["subdivision_vertices"] = res.sub.target.num_vertices();
    j["generated_at"] = timestamp();
    return j;
}

void print_certificates(const PipelineResult& res) {
    for (const auto& c : res.certificates) {
        std::printf("  [%s] %-20s", c.pass ? "pass" : "FAIL", c.check.c_str());
        if (c.check == "nerve") {
            std::printf(" pairs=%s worst=%s",
                        c.details["pairs_checked"].dump().c_str(),
                        c.details.contains("worst_nonadjacent")
                            ? c.details["worst_nonadjacent"]["text"].get<std::string>().c_str()
                            : "n/a");
        }
        std::printf(" (%lld ms)\n", static_cast<long long>(c.elapsed_ms));
    }
}

int cmd_certify_impl(const std::string& input, int n_flag, int workers,
                     const std::string& out_path, const std::vector<std::string>& checks) {
    LoadedInput in = load_input(input);
    PipelineOptions opt;
    opt.n = resolve_n(in, n_flag);
    opt.workers = workers;
    opt.checks = checks;
    std::printf("certify %s: %d vertices, ambient n = %d\n", in.name.c_str(),
                in.complex.num_vertices(), opt.n);
    PipelineResult res = certify_pipeline(in.complex, opt);
    std::printf("subdivision: %d vertices\n", res.sub.target.num_vertices());
    print_certificates(res);
    if (!out_path.empty()) emit(bundle_json(in, res), out_path);
    std::printf("%s\n", res.all_pass ? "ALL CHECKS PASS" : "CHECK FAILURE");
    return res.all_pass ? kExitPass : kExitCheckFailure;
}

int run_selfcheck(std::uint64_t seed) {
    int failures = 0;
    auto report = [&](const std::string& what, bool ok) {
        std::printf("  [%s] %s\n", ok ? "pass" : "FAIL", what.c_str());
        if (!ok) ++failures;
    };

    for (int n = 4; n <= 16; ++n) {
        report("signature (" + std::to_string(n) + ",1)", certify_signature(n).pass);
        report("galois positive definite n=" + std::to_string(n),
               certify_galois_positive(n).pass);
    }

    const auto& P = the_600cell();
    bool deg_ok = true;
    for (const auto& nb : P.adjacency) deg_ok = deg_ok && nb.size() == 12;
    report("600-cell: 120 vertices, 720 edges, 600 tetrahedra, 12-regular",
           P.vertices.size() == 120 && P.edges.size() == 720 && P.tetrahedra.size() == 600 &&
               deg_ok);
    report("600-cell clique complex flag-no-square", complex_600cell().is_flag_no_square());

    auto ico = generate_icosahedron();
    report("icosahedron f-vector (12,30,20) and flag-no-square",
           ico.f_vector() == std::vector<std::size_t>{12, 30, 20} && ico.is_flag_no_square());

    auto sub = ps_subdivide(simplex_skeleton(4, 3));
    int levels[4] = {0, 0, 0, 0};
    for (const auto& vi : sub.info) ++levels[vi.level];
    report("single tetrahedron block: levels 4/6/12/94 of 116",
           sub.target.num_vertices() == 116 && levels[0] == 4 && levels[1] == 6 &&
               levels[2] == 12 && levels[3] == 94);

    // table multiset: each interior pattern appears once per slot permutation
    {
        const auto& B = canonical_block();
        std::map<std::string, int> sorted_rows;
        for (const auto& bv : B.verts) {
            if (bv.level != 3) continue;
            std::vector<Golden> slots = {bv.coords[0], bv.coords[1], bv.coords[2], bv.coords[3]};
            std::sort(slots.begin(), slots.end(),
                      [](const Golden& a, const Golden& b) { return b < a; });
            std::string key;
            for (const auto& s : slots) key += s.str() + ";";
            ++sorted_rows[key];
        }
        bool ok = sorted_rows.size() == 11;
        for (const auto& row : coefficient_table()) {
            if (row.level != 3) continue;
            std::string key;
            for (const auto& c : row.c) key += c.str() + ";";
            ok = ok && sorted_rows[key] == row.count;
        }
        report("interior wall multiset matches the coefficient table (11 rows)", ok);
    }

    auto cases = exhaustive_case_checks();
    report("exhaustive case bounds: 78 + 66 instances at most -phi",
           cases.pass && cases.details["case3_pairs"] == 78 && cases.details["case4_pairs"] == 66);

    // fast vs dense inner product oracle
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coef(-8, 8);
        bool ok = true;
        for (int n : {4, 9}) {
            auto form = bn_form(n);
            for (int trial = 0; trial < 5000; ++trial) {
                GoldenVector x(static_cast<std::size_t>(n + 1)), y(static_cast<std::size_t>(n + 1));
                for (int i = 0; i <= n; ++i) {
                    x[static_cast<std::size_t>(i)] = Golden(mpq_class(coef(rng)), mpq_class(coef(rng)));
                    y[static_cast<std::size_t>(i)] = Golden(mpq_class(coef(rng)), mpq_class(coef(rng)));
                }
                ok = ok && form.inner(x, y) == dot_with_form(x, form.matrix, y);
            }
        }
        report("fast inner product vs dense triple product (10000 random pairs)", ok);
    }

    std::printf("%s\n", failures == 0 ? "SELFCHECK PASS" : "SELFCHECK FAILURE");
    return failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of reflection-group wall systems"};
    app.require_subcommand(1);

    auto* corpus_cmd = app.add_subcommand("corpus", "list or export built-in triangulations");
    corpus_cmd->require_subcommand(1);
    auto* corpus_list_cmd = corpus_cmd->add_subcommand("list", "list built-in complexes");
    auto* corpus_export_cmd = corpus_cmd->add_subcommand("export", "export a complex as JSON");
    std::string export_name, export_out;
    corpus_export_cmd->add_option("name", export_name, "corpus entry")->required();
    corpus_export_cmd->add_option("--out", export_out, "output path (default stdout)");

    std::string sub_input, sub_out;
    auto* subdivide_cmd = app.add_subcommand("subdivide", "subdivision with annotations");
    subdivide_cmd->add_option("input", sub_input, "corpus name or JSON file")->required();
    subdivide_cmd->add_option("--out", sub_out, "output path (default stdout)");

    std::string cert_input, cert_out;
    int cert_n = -1, cert_workers = 0;
    std::vector<std::string> cert_checks;
    auto* certify_cmd = app.add_subcommand("certify", "run the full certification pipeline");
    certify_cmd->add_option("input", cert_input, "corpus name or JSON file")->required();
    certify_cmd->add_option("--n", cert_n, "ambient dimension (default: vertex count)");
    certify_cmd->add_option("--workers", cert_workers, "sweep worker count (default: cores)");
    certify_cmd->add_option("--out", cert_out, "certificate bundle path");
    certify_cmd->add_option("--checks", cert_checks,
                            "run only the named checks (default: all)")
        ->delimiter(',');

    std::string cls_input, cls_out;
    int cls_workers = 0;
    auto* classify_cmd = app.add_subcommand("classify", "certify, then classify the limit set");
    classify_cmd->add_option("input", cls_input, "corpus name or JSON file")->required();
    classify_cmd->add_option("--workers", cls_workers, "sweep worker count");
    classify_cmd->add_option("--out", cls_out, "verdict bundle path");

    std::uint64_t seed = 20260811;
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "built-in verification battery");
    selfcheck_cmd->add_option("--seed", seed, "seed for the randomized oracles");

    std::string gen_input, gen_out;
    int gen_n = -1;
    auto* gen_cmd = app.add_subcommand("export-generators", "wall vectors and reflections");
    gen_cmd->add_option("input", gen_input, "corpus name or JSON file")->required();
    gen_cmd->add_option("--n", gen_n, "ambient dimension (default: vertex count)");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus_list_cmd->parsed()) {
            for (const auto& [name, desc] : corpus_list())
                std::printf("%-28s %s\n", name.c_str(), desc.c_str());
            return kExitPass;
        }
        if (corpus_export_cmd->parsed()) {
            auto entry = corpus_get(export_name);
            if (!entry) {
                std::fprintf(stderr, "error: unknown corpus entry '%s'\n", export_name.c_str());
                return kExitUsage;
            }
            emit(complex_to_json(entry->complex, entry->name, entry->tags), export_out);
            return kExitPass;
        }
        if (subdivide_cmd->parsed()) {
            LoadedInput in = load_input(sub_input);
            auto sub = ps_subdivide(in.complex);
            emit(subdivision_json(in, sub), sub_out);
            return kExitPass;
        }
        if (certify_cmd->parsed())
            return cmd_certify_impl(cert_input, cert_n, cert_workers, cert_out, cert_checks);
        if (classify_cmd->parsed()) {
            LoadedInput in = load_input(cls_input);
            PipelineOptions opt;
            opt.workers = cls_workers;
            PipelineResult res = certify_pipeline(in.complex, opt);
            print_certificates(res);
            if (!res.all_pass) {
                std::printf("CHECK FAILURE (classification skipped)\n");
                return kExitCheckFailure;
            }
            auto verdict = classify_limit_set(in.complex, in.tags);
            nlohmann::json j = bundle_json(in, res);
            j["verdict"] = verdict.to_json();
            std::printf("verdict: %s\n", verdict.label.c_str());
            if (in.tags.contains("core_vertices")) {
                auto menger = menger_evidence(res.sub, in.tags);
                j["menger_evidence"] = menger.to_json();
                std::printf("menger evidence (without vertex %s): %s\n",
                            menger.chosen_vertex.c_str(), menger.all_pass ? "pass" : "FAIL");
                if (!menger.all_pass) {
                    if (!cls_out.empty()) emit(j, cls_out);
                    return kExitCheckFailure;
                }
            }
            if (!cls_out.empty()) emit(j, cls_out);
            return kExitPass;
        }
        if (selfcheck_cmd->parsed()) return run_selfcheck(seed);
        if (gen_cmd->parsed()) {
            LoadedInput in = load_input(gen_input);
            int n = resolve_n(in, gen_n);
            auto sub = ps_subdivide(in.complex);
            auto va = assign_vectors(sub, n);
            auto form = bn_form(n);
            auto gens = reflection_generators(form, va, sub.target);
            nlohmann::json verts = nlohmann::json::array();
            for (int v = 0; v < sub.target.num_vertices(); ++v) {
                const auto& vi = sub.info[static_cast<std::size_t>(v)];
                nlohmann::json carrier = nlohmann::json::array();
                for (int s : vi.carrier) carrier.push_back(sub.source.label(s));
                verts.push_back({{"label", sub.target.label(v)},
                                 {"carrier", carrier},
                                 {"level", vi.level},
                                 {"vector", vector_to_json(va.vectors[static_cast<std::size_t>(v)])},
                                 {"reflection", matrix_to_json(gens.matrix(v))}});
            }
            nlohmann::json j = {{"input", in.name}, {"n", n}, {"generators", verts}};
            const int V = sub.target.num_vertices();
            if (V <= 1000) {
                nlohmann::json gram = nlohmann::json::array();
                for (int u = 0; u < V; ++u) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int w = 0; w < V; ++w)
                        row.push_back(golden_to_json(form.inner(
                            va.vectors[static_cast<std::size_t>(u)],
                            va.vectors[static_cast<std::size_t>(w)])));
                    gram.push_back(std::move(row));
                }
                j["gram"] = std::move(gram);
            } else {
                j["gram_omitted"] = "gram matrix omitted above 1000 vertices";
            }
            emit(j, gen_out);
            return kExitPass;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
