#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cplan/mso.hpp"
#include "cplan/oracle.hpp"
#include "cplan/toolkit.hpp"

using namespace cplan;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadParams, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(ErrorCode::BadParams, "cannot open " + path + " for writing");
    out << text;
}

int max_face_len(const CGraph& cg) {
    const auto& lens = cg.graph.faces().lengths;
    return *std::max_element(lens.begin(), lens.end());
}

json stats_json(const SolveStats& st) {
    return {{"recursive_calls", st.recursive_calls},
            {"base_cases", st.base_cases},
            {"stars_tested", st.stars_tested},
            {"candidates_tried", st.candidates_tried},
            {"max_depth", st.max_depth}};
}

json decision_json(const Decision& d, const SolveStats& st) {
    json j{{"format", 1}, {"answer", d.yes ? "yes" : "no"}, {"stats", stats_json(st)}};
    if (d.reason) j["reason"] = to_string(*d.reason);
    if (d.separator) j["separator"] = d.separator->verts;
    return j;
}

struct CheckFlags {
    std::string instance;
    std::string witness_out;
    int threshold = 64;
    int nested = 0;
    long long timeout_ms = 0;
    std::string gadgets = "auto";
    bool parallel_any = false;
};

SolveOptions solve_options(const CheckFlags& f, bool nested_path) {
    SolveOptions o;
    o.threshold = f.threshold;
    o.nested_h = nested_path ? f.nested : 0;
    o.time_limit_ms = f.timeout_ms;
    if (f.gadgets == "force")
        o.gadgets = SolveOptions::Gadgets::Force;
    else if (f.gadgets == "skip")
        o.gadgets = SolveOptions::Gadgets::Skip;
    else if (f.gadgets != "auto")
        fail(ErrorCode::BadParams, "gadgets must be auto, force or skip");
    return o;
}

int run_check(const CheckFlags& f) {
    const CGraph cg = parse_instance(slurp(f.instance));
    Decision d;
    SolveStats st;
    if (f.parallel_any && f.nested > 0) {
        // Race the generic and the nested-ring strategy, first answer wins.
        using Outcome = std::pair<Decision, SolveStats>;
        auto launch = [&](bool nested_path) {
            return std::async(std::launch::async, [&, nested_path]() -> Outcome {
                SolveStats s;
                Decision dec = test_cplanarity(cg, solve_options(f, nested_path), &s);
                return {std::move(dec), s};
            });
        };
        auto a = launch(false), b = launch(true);
        for (;;) {
            if (a.wait_for(std::chrono::milliseconds(5)) == std::future_status::ready) {
                std::tie(d, st) = a.get();
                break;
            }
            if (b.wait_for(std::chrono::milliseconds(5)) == std::future_status::ready) {
                std::tie(d, st) = b.get();
                break;
            }
        }
        std::cout << decision_json(d, st).dump(2) << "\n";
        if (d.yes && !f.witness_out.empty()) spill(f.witness_out, serialize_witness(*d.witness));
        std::cout.flush();
        std::_Exit(d.yes ? 0 : 1); // the losing strategy may still be running
    }
    d = test_cplanarity(cg, solve_options(f, true), &st);
    std::cout << decision_json(d, st).dump(2) << "\n";
    if (d.yes && !f.witness_out.empty()) spill(f.witness_out, serialize_witness(*d.witness));
    return d.yes ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-planarity decision engine for embedded flat clustered graphs"};
    app.require_subcommand(1);

    CheckFlags cf;
    auto* check = app.add_subcommand("check", "decide c-planarity of an instance");
    check->add_option("instance", cf.instance, "instance JSON file, - for stdin")->required();
    check->add_option("--threshold", cf.threshold, "base-case size bound");
    check->add_option("--nested", cf.nested, "try the nested-ring separator with this bound");
    check->add_option("--timeout", cf.timeout_ms, "time limit in ms, 0 = none");
    check->add_option("--gadgets", cf.gadgets, "auto|force|skip");
    check->add_option("--emit-witness", cf.witness_out, "write the witness JSON here on yes");
    check->add_flag("--parallel-any", cf.parallel_any,
                    "race generic and nested strategies (needs --nested)");

    std::string oracle_instance;
    int oracle_cap = 30;
    auto* orc = app.add_subcommand("oracle", "exhaustive reference decision");
    orc->add_option("instance", oracle_instance)->required();
    orc->add_option("--cap", oracle_cap, "candidate-count cap");

    std::string verify_instance, verify_witness_path;
    auto* ver = app.add_subcommand("verify", "check a witness against an instance");
    ver->add_option("instance", verify_instance)->required();
    ver->add_option("witness", verify_witness_path)->required();

    std::string gen_family, gen_clustering = "single", gen_kind = "basic", gen_out;
    int gen_levels = 5, gen_circ = 6, gen_len = 4, gen_h = 6, gen_n = 20, gen_max_face = 6;
    unsigned gen_seed = 0;
    bool gen_cap = false;
    auto* gen = app.add_subcommand("gen", "generate an instance of a named family");
    gen->add_option("--family", gen_family,
                    "nested-triangles|buckytube|h-nested|random-planar|cluster-separator")
        ->required();
    gen->add_option("--levels", gen_levels);
    gen->add_option("--clustering", gen_clustering, "single|per-level|alternating");
    gen->add_option("--circumference", gen_circ);
    gen->add_option("--length", gen_len);
    gen->add_option("--ring-bound", gen_h, "max ring length for h-nested");
    gen->add_flag("--cap", gen_cap, "close the innermost ring with a hub");
    gen->add_option("--n", gen_n);
    gen->add_option("--max-face", gen_max_face);
    gen->add_option("--kind", gen_kind, "basic|ring|deep");
    gen->add_option("--seed", gen_seed);
    gen->add_option("-o,--out", gen_out);

    std::string render_instance, render_witness_path, render_out;
    auto* ren = app.add_subcommand("render", "draw an instance as SVG");
    ren->add_option("instance", render_instance)->required();
    ren->add_option("--witness", render_witness_path);
    ren->add_option("-o,--out", render_out);

    std::string mso_instance, mso_out;
    bool mso_strict = false;
    auto* mso = app.add_subcommand("emit-mso", "emit the saturation formula");
    mso->add_option("instance", mso_instance)->required();
    mso->add_flag("--strict", mso_strict, "require a 3-connected instance");
    mso->add_option("-o,--out", mso_out);

    std::string stats_instance;
    bool stats_sep = false;
    int stats_nested = 0;
    auto* sta = app.add_subcommand("stats", "structural summary of an instance");
    sta->add_option("instance", stats_instance)->required();
    sta->add_flag("--separator", stats_sep, "include a cycle-separator report");
    sta->add_option("--nested", stats_nested, "use the nested-ring separator with this bound");

    std::string bench_family = "random-planar", bench_out;
    int bench_from = 10, bench_to = 40, bench_step = 10, bench_reps = 3, bench_workers = 1;
    int bench_threshold = 64, bench_nested = 0, bench_max_face = 6;
    long long bench_timeout = 0;
    unsigned bench_seed = 1;
    auto* ben = app.add_subcommand("bench", "run a family sweep and report CSV");
    ben->add_option("--family", bench_family);
    ben->add_option("--from", bench_from);
    ben->add_option("--to", bench_to);
    ben->add_option("--step", bench_step);
    ben->add_option("--reps", bench_reps);
    ben->add_option("--seed", bench_seed);
    ben->add_option("--timeout", bench_timeout, "per-instance limit in ms");
    ben->add_option("--threshold", bench_threshold);
    ben->add_option("--nested", bench_nested);
    ben->add_option("--max-face", bench_max_face);
    ben->add_option("--parallel", bench_workers, "worker threads");
    ben->add_option("-o,--out", bench_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(cf);

        if (orc->parsed()) {
            const CGraph cg = parse_instance(slurp(oracle_instance));
            const Decision d = brute_force_cplanar(cg, oracle_cap);
            SolveStats st;
            std::cout << decision_json(d, st).dump(2) << "\n";
            return d.yes ? 0 : 1;
        }

        if (ver->parsed()) {
            const CGraph cg = parse_instance(slurp(verify_instance));
            const Witness w = parse_witness(slurp(verify_witness_path), cg);
            const WitnessReport rep = verify_witness(cg, w);
            json j{{"format", 1}, {"ok", rep.ok}, {"violations", rep.violations}};
            std::cout << j.dump(2) << "\n";
            return rep.ok ? 0 : 1;
        }

        if (gen->parsed()) {
            CGraph cg = [&] {
                if (gen_family == "nested-triangles")
                    return gen_nested_triangles(gen_levels, gen_clustering);
                if (gen_family == "buckytube") return gen_buckytube(gen_circ, gen_len);
                if (gen_family == "h-nested")
                    return gen_h_nested(gen_h, gen_levels, gen_cap, gen_seed);
                if (gen_family == "random-planar")
                    return gen_random_planar(gen_n, gen_max_face, gen_seed);
                if (gen_family == "cluster-separator") return gen_cluster_separator(gen_kind);
                fail(ErrorCode::BadParams, "unknown family " + gen_family);
            }();
            spill(gen_out, serialize_instance(cg));
            return 0;
        }

        if (ren->parsed()) {
            const CGraph cg = parse_instance(slurp(render_instance));
            std::optional<Witness> w;
            if (!render_witness_path.empty())
                w = parse_witness(slurp(render_witness_path), cg);
            spill(render_out, render_svg(cg, w ? &*w : nullptr));
            return 0;
        }

        if (mso->parsed()) {
            const CGraph cg = parse_instance(slurp(mso_instance));
            spill(mso_out, render_mso(emit_mso2(cg, mso_strict)));
            return 0;
        }

        if (sta->parsed()) {
            const CGraph cg = parse_instance(slurp(stats_instance));
            const ClusterComponents cc = cluster_components(cg);
            json j{{"format", 1},
                   {"n", cg.graph.num_vertices()},
                   {"edges", cg.graph.num_edges()},
                   {"faces", cg.graph.faces().count()},
                   {"max_face", max_face_len(cg)},
                   {"clusters", cg.cluster_count},
                   {"disconnected_clusters", cc.disconnected_cluster_count()},
                   {"candidates", candidate_saturating_edges(cg).size()},
                   {"enclosure_ok", check_condition_ii(cg).ok}};
            if (stats_sep) {
                const SeparatorReport rep = stats_nested > 0
                                                ? nested_cycle_separator(cg.graph, stats_nested)
                                                : cycle_separator(cg.graph);
                j["separator"] = {{"cycle", rep.cycle.verts},
                                  {"inside", rep.inside_count},
                                  {"outside", rep.outside_count},
                                  {"size", rep.size}};
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (ben->parsed()) {
            std::vector<std::pair<std::string, CGraph>> corpus;
            for (int size = bench_from; size <= bench_to; size += bench_step)
                for (int rep = 0; rep < bench_reps; ++rep) {
                    const unsigned seed = bench_seed + static_cast<unsigned>(97 * size + rep);
                    const std::string name =
                        bench_family + "-" + std::to_string(size) + "-" + std::to_string(rep);
                    if (bench_family == "nested-triangles")
                        corpus.emplace_back(name, gen_nested_triangles(size));
                    else if (bench_family == "buckytube")
                        corpus.emplace_back(name, gen_buckytube(6, size));
                    else if (bench_family == "h-nested")
                        corpus.emplace_back(name, gen_h_nested(6, size, rep % 2 == 0, seed));
                    else if (bench_family == "random-planar")
                        corpus.emplace_back(name, gen_random_planar(size, bench_max_face, seed));
                    else
                        fail(ErrorCode::BadParams, "unknown bench family " + bench_family);
                }
            SolveOptions opts;
            opts.threshold = bench_threshold;
            opts.nested_h = bench_nested;
            opts.time_limit_ms = bench_timeout;
            spill(bench_out, bench_csv(bench(corpus, opts, bench_workers)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
