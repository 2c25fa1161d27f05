#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hypercore/census.hpp"
#include "hypercore/configs.hpp"
#include "hypercore/constructions.hpp"
#include "hypercore/core_search.hpp"
#include "hypercore/harness.hpp"
#include "hypercore/io.hpp"

using namespace hypercore;
using nlohmann::json;

namespace {

json opt_json(const std::optional<ConfigWitness>& w) { return w ? to_json(*w) : json(nullptr); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_graph(const Hypergraph3& h, const std::string& out) {
    if (out.empty() || out == "-") {
        write_h3(std::cout, h);
    } else {
        save_h3(out, h);
    }
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    auto dot = path.find_last_of('.');
    auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
    return path.substr(0, dot) + ext;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercore: cores and dense configurations in 3-uniform hypergraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // census
    std::string file;
    auto* census = app.add_subcommand("census", "pair census and the first witness of each finder");
    census->add_option("file", file, ".h3 or .json hypergraph")->required();

    // core
    std::size_t kmax = 8;
    std::uint64_t budget = kDefaultBudget;
    std::string method = "exact";
    std::uint64_t seed = 1;
    std::size_t retries = 50;
    bool exact_size = false;
    auto* core = app.add_subcommand("core", "find a small core");
    core->add_option("file", file)->required();
    core->add_option("--kmax", kmax, "largest core size for the exact search");
    core->add_option("--budget", budget, "branch-and-bound node budget");
    core->add_option("--method", method)->check(CLI::IsMember({"exact", "strip", "sample", "cycle"}));
    core->add_option("--seed", seed);
    core->add_option("--retries", retries, "subsample attempts");
    core->add_flag("--exact-size", exact_size, "core on exactly kmax vertices");

    // gen
    auto* gen = app.add_subcommand("gen", "generate hypergraphs");
    gen->require_subcommand(1);
    std::string out;
    std::uint32_t p = 7;
    std::size_t n = 20, m = 100, k = 10, l = 8, q = 0;
    auto* gen_mod = gen->add_subcommand("modular", "edges {a, p+b, 2p+(a+b mod p)}");
    gen_mod->add_option("--p", p)->required();
    gen_mod->add_option("--out", out);
    auto* gen_rand = gen->add_subcommand("random", "uniform random triples");
    gen_rand->add_option("--n", n)->required();
    gen_rand->add_option("--m", m)->required();
    gen_rand->add_option("--seed", seed);
    gen_rand->add_option("--tripartite", q, "class size q; n is then ignored");
    gen_rand->add_option("--out", out);
    auto* gen_avoid = gen->add_subcommand("avoid", "random edges avoiding (k,l) configurations");
    gen_avoid->add_option("--n", n)->required();
    gen_avoid->add_option("--k", k)->required();
    gen_avoid->add_option("--l", l)->required();
    gen_avoid->add_option("--m", m)->required();
    gen_avoid->add_option("--seed", seed);
    gen_avoid->add_option("--out", out);
    std::string grp;
    std::size_t cyclic = 0;
    auto* gen_group = gen->add_subcommand("group", "triples {a, b, ab} over all pairs of a group");
    gen_group->add_option("--grp", grp, ".grp table");
    gen_group->add_option("--cyclic", cyclic, "Z/m instead of a table");
    gen_group->add_option("--out", out);

    // quad
    auto* quad = app.add_subcommand("quad", "count (7,4) quadruples over the full pair set");
    quad->add_option("--grp", grp);
    quad->add_option("--cyclic", cyclic);

    // config
    auto* config = app.add_subcommand("config", "k vertices spanning at least l edges");
    config->add_option("file", file)->required();
    config->add_option("--k", k)->required();
    config->add_option("--l", l)->required();
    config->add_option("--budget", budget);

    // c63
    bool count_only = false;
    auto* c63 = app.add_subcommand("c63", "enumerate (6,3) configurations of a linear host");
    c63->add_option("file", file)->required();
    c63->add_flag("--count-only", count_only);

    // bes14
    auto* bes14 = app.add_subcommand("bes14", "class split, aux clique hypergraph and (14,10) assembly");
    bes14->add_option("file", file)->required();
    bes14->add_option("--seed", seed);

    // core15
    auto* core15 = app.add_subcommand("core15", "15-vertex cores from paired (6,3) configurations");
    core15->add_option("file", file)->required();
    core15->add_option("--budget", budget);

    // linearize
    auto* lin = app.add_subcommand("linearize", "drop edges until no pair is covered twice");
    lin->add_option("file", file)->required();
    lin->add_option("--out", out);

    // table
    std::size_t kmin = 4, kmax_t = 15, table_n = 30;
    std::string seeds_s = "1,2,3", report = "report.csv", densities, modular = "5,7";
    std::uint64_t table_budget = 1'000'000;
    bool timing = false;
    auto* table = app.add_subcommand("table", "threshold scan and bounds report");
    table->add_option("--kmin", kmin);
    table->add_option("--kmax", kmax_t);
    table->add_option("--n", table_n, "vertices of the random tripartite hosts");
    table->add_option("--seeds", seeds_s, "comma separated");
    table->add_option("--densities", densities, "edge counts, comma separated");
    table->add_option("--modular", modular, "primes for the modular rows, comma separated");
    table->add_option("--budget", table_budget);
    table->add_option("--out", report, "CSV path; JSON goes next to it");
    table->add_flag("--timing", timing, "record wall time per row (breaks bit-identical reports)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*census) {
            auto h = load_h3(file);
            json j;
            j["n"] = h.num_vertices();
            j["m"] = h.num_edges();
            j["pair_census"] = pair_census(h);
            j["six_core_threshold"] = six_core_threshold(h.num_vertices());
            j["k221_threshold"] = k221_threshold(h.num_vertices());
            j["k221"] = opt_json(find_k221(h));
            j["six_core"] = opt_json(find_6core(h));
            auto c4 = intersection_graph_c4(h);
            j["intersection_c4"] = c4 ? json{{"witness", to_json(c4->witness)}, {"double_edge", c4->from_double_edge}}
                                      : json(nullptr);
            print(j);
        } else if (*core) {
            auto h = load_h3(file);
            json j;
            j["method"] = method;
            std::optional<CoreCertificate> cert;
            if (method == "exact") {
                MinCoreOptions o;
                o.budget = budget;
                o.exact_size = exact_size;
                o.threads = 0;
                auto r = min_core(h, kmax, o);
                cert = r.core;
                j["status"] = to_string(r.status);
                j["nodes_expanded"] = r.nodes_expanded;
            } else if (method == "strip") {
                cert = two_core(h);
            } else if (method == "sample") {
                j["sample_size"] = subsample_size(h.num_vertices(), h.num_edges());
                cert = subsample_strip(h, seed, retries);
            } else {
                auto c = cycle_core(h);
                if (c) {
                    cert = c->core;
                    j["cycle_length"] = c->cycle_length;
                }
            }
            if (!j.contains("status")) j["status"] = cert ? "found" : "none";
            if (!j.contains("nodes_expanded")) j["nodes_expanded"] = 0;
            j["vertices"] = cert ? json(cert->vertices) : json(nullptr);
            j["edges"] = cert ? json(cert->edges) : json(nullptr);
            print(j);
        } else if (*gen_mod) {
            emit_graph(modular_construction(p), out);
        } else if (*gen_rand) {
            emit_graph(q > 0 ? random_tripartite(q, m, seed) : random_uniform(n, m, seed), out);
        } else if (*gen_avoid) {
            auto r = avoid_config_generator(n, k, l, m, seed);
            emit_graph(r.graph, out);
            std::cerr << "edges " << r.graph.num_edges() << " attempts " << r.attempts << " rejected " << r.rejected
                      << (r.reached_target ? "" : " (target not reached)") << '\n';
        } else if (*gen_group) {
            Group g = cyclic > 0 ? Group::cyclic(cyclic) : load_grp(grp);
            emit_graph(group_system(g, all_pairs(g)).host, out);
        } else if (*quad) {
            Group g = cyclic > 0 ? Group::cyclic(cyclic) : load_grp(grp);
            print(json{{"order", g.order()}, {"quadruples", count_74_quadruples(group_system(g, all_pairs(g)))}});
        } else if (*config) {
            auto h = load_h3(file);
            auto r = find_config(h, k, l, budget);
            print(json{{"status", to_string(r.status)},
                       {"nodes_expanded", r.nodes_expanded},
                       {"witness", opt_json(r.witness)}});
        } else if (*c63) {
            auto h = load_h3(file);
            auto cs = enumerate_63(h);
            json j;
            j["count"] = cs.size();
            if (!count_only) {
                j["configs"] = json::array();
                for (const auto& c : cs)
                    j["configs"].push_back({{"edges", c.edges}, {"deg2", c.deg2}, {"deg1", c.deg1}});
            }
            print(j);
        } else if (*bes14) {
            auto h = load_h3(file);
            auto a = build_aux(h, seed);
            auto kc = count_k43(a);
            json j;
            j["configs_total"] = a.total_configs;
            j["configs_kept"] = a.configs.size();
            j["aux_edges"] = a.faces.size();
            j["cliques"] = kc.cliques;
            j["packing"] = kc.packing;
            j["short_circuit"] = opt_json(a.short_circuit);
            j["witness"] = a.short_circuit ? to_json(*a.short_circuit) : opt_json(assemble_1410(a));
            print(j);
        } else if (*core15) {
            auto h = load_h3(file);
            auto r = find_core15(h, budget);
            print(json{{"status", to_string(r.status)},
                       {"gadgets", r.gadgets},
                       {"core", r.core ? to_json(*r.core) : json(nullptr)}});
        } else if (*lin) {
            auto r = linearize(load_h3(file));
            emit_graph(r.graph, out);
            std::cerr << "retained " << r.retained_fraction << '\n';
        } else if (*table) {
            auto seeds = parse_list(seeds_s);
            std::size_t cls = std::max<std::size_t>(table_n / 3, 1);
            std::vector<std::uint64_t> ms = parse_list(densities);
            if (ms.empty()) ms = {cls * cls / 2, cls * cls, 2 * cls * cls};
            std::vector<std::pair<std::size_t, GeneratorSpec>> cells;
            for (std::size_t kk = kmin; kk <= kmax_t; ++kk) {
                for (auto pr : parse_list(modular)) cells.emplace_back(kk, GeneratorSpec::modular(pr));
                for (auto mm : ms)
                    cells.emplace_back(kk, GeneratorSpec::tripartite(cls, std::min<std::uint64_t>(mm, cls * cls * cls)));
            }
            ScanOptions so;
            so.budget = table_budget;
            so.timing = timing;
            BoundsReport r;
            r.seeds = seeds;
            r.rows = threshold_scan(cells, seeds, so);
            r.table = table1_rows();
            std::string js = replace_extension(report, ".json");
            emit_report(r, report, js);
            std::cout << report_csv(r.rows);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
