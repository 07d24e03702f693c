#include "universo/bounds.hpp"
#include "universo/coloring.hpp"
#include "universo/design.hpp"
#include "universo/errors.hpp"
#include "universo/graph6.hpp"
#include "universo/json_io.hpp"
#include "universo/oracle.hpp"
#include "universo/pathdecomp.hpp"
#include "universo/universal.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace universo;

namespace {

struct Report {
    json doc;
    bool ok = true;

    explicit Report(std::string command) {
        doc["report_version"] = 1;
        doc["command"] = std::move(command);
        doc["inputs"] = json::object();
        doc["outputs"] = json::array();
        doc["checks"] = json::array();
        doc["warnings"] = json::array();
    }
    void input(const std::string& key, const json& value) { doc["inputs"][key] = value; }
    void input_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        doc["inputs"][path] = fnv1a_hex(content);
    }
    void output(const std::string& path) { doc["outputs"].push_back(path); }
    void warn(const std::string& msg) { doc["warnings"].push_back(msg); }
    void check(const std::string& name, bool pass, const std::string& detail = {}) {
        doc["checks"].push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        ok = ok && pass;
    }
    int finish() {
        std::cout << doc.dump(2) << std::endl;
        return ok ? 0 : 1;
    }
};

OracleBudget budget_from_env() {
    OracleBudget b;
    if (const char* env = std::getenv("UNIVERSO_BUDGET_STATES"))
        b.max_states = std::atoll(env);
    return b;
}

struct LoadedMember {
    Graph graph;
    std::optional<PathDecomposition> decomp;
    std::optional<Coloring> coloring; // proper input coloring (nothing deleted)
};

std::vector<LoadedMember> load_family_dir(const std::string& dir, Report& rep) {
    if (!fs::is_directory(dir))
        throw parameter_error("family directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".g6")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw parameter_error("family directory has no .g6 members: " + dir);

    std::vector<LoadedMember> members;
    for (const auto& f : files) {
        LoadedMember m;
        m.graph = read_graph6_file(f.string());
        rep.input_file(f.string());
        fs::path decomp_file = f.parent_path() / (f.stem().string() + ".decomp.json");
        fs::path color_file = f.parent_path() / (f.stem().string() + ".coloring.json");
        if (fs::exists(decomp_file)) {
            m.decomp = decomposition_from_json(parse_json_file(decomp_file.string()));
            rep.input_file(decomp_file.string());
        }
        if (fs::exists(color_file)) {
            m.coloring = coloring_from_json(parse_json_file(color_file.string()));
            rep.input_file(color_file.string());
        }
        members.push_back(std::move(m));
    }
    return members;
}

FamilySpec to_family(const std::vector<LoadedMember>& members) {
    std::vector<Graph> graphs;
    for (const auto& m : members)
        graphs.push_back(m.graph);
    return FamilySpec::of(std::move(graphs));
}

PathDecomposition member_decomposition(const LoadedMember& m, Report& rep) {
    if (m.decomp)
        return *m.decomp;
    rep.warn("member " + m.graph.name() + ": no decomposition sidecar, using a "
             "heuristic decomposition");
    // best available construction for the graph's class
    try {
        return decompose(m.graph, DecomposeKind::caterpillar);
    } catch (const classification_error&) {
    }
    try {
        return decompose(m.graph, DecomposeKind::tree);
    } catch (const classification_error&) {
    }
    return decompose(m.graph, DecomposeKind::interval_heuristic);
}

Coloring member_input_coloring(const LoadedMember& m, int k, Report& rep) {
    Coloring c = m.coloring ? *m.coloring : greedy_coloring(m.graph);
    if (!m.coloring)
        rep.warn("member " + m.graph.name() + ": no coloring sidecar, using the greedy "
                 "coloring");
    if (c.k() > k)
        throw parameter_error("member " + m.graph.name() + " needs " +
                              std::to_string(c.k()) + " colors, more than k");
    while (c.k() < k)
        c.classes.push_back({});
    return c;
}

/// full pipeline: decomposition + proper coloring -> almost-equitable with
/// exactly `pad_to` deletions
Coloring member_equitable(const LoadedMember& m, int k, int pad_to, Report& rep,
                          std::vector<RebalanceTrace>* traces = nullptr) {
    PathDecomposition d = member_decomposition(m, rep);
    Coloring input = member_input_coloring(m, k, rep);
    AlmostEquitableResult r = almost_equitable_coloring(m.graph, d, input);
    if (traces)
        traces->insert(traces->end(), r.traces.begin(), r.traces.end());
    if (static_cast<int>(r.coloring.deleted.size()) > pad_to)
        throw capacity_error("member " + m.graph.name() + " needs " +
                             std::to_string(r.coloring.deleted.size()) +
                             " deletions, more than p");
    return pad_deletion_set(m.graph, r.coloring, pad_to);
}

void emit_universal(const UniversalGraph& u, const std::string& out_prefix, Report& rep) {
    if (out_prefix.empty())
        return;
    write_graph6_file(u.host, out_prefix + ".g6");
    write_json_file(universal_sidecar(u), out_prefix + ".json");
    rep.output(out_prefix + ".g6");
    rep.output(out_prefix + ".json");
}

void report_verify(const VerifyReport& v, Report& rep) {
    rep.check("host-size", v.size_ok, v.size_detail);
    for (const auto& m : v.members)
        rep.check("member-" + m.name, m.pass, m.detail);
    if (v.edge_disjoint_checked)
        rep.check("edge-disjoint", v.edge_disjoint_ok, v.edge_detail);
}

// --- subcommand drivers ---

int run_bounds_table() {
    Report rep("bounds table");
    TableReport table = reproduce_tables();

    std::printf("%-22s %10s %10s %4s %4s %6s %6s\n", "family", "g", "c", "k", "s",
                "t", "ok");
    for (const auto& r : table.rows) {
        if (r.k != 0)
            std::printf("%-22s %10.4f %10.4f %4d %4d %6lld %6s\n", r.family.c_str(), r.g,
                        r.computed_c, r.k, r.s, r.computed_t,
                        r.c_ok && r.t_ok ? "yes" : "NO");
        else
            std::printf("%-22s %10.4f %10.4f %4s %4s %6s %6s\n", r.family.c_str(), r.g,
                        r.computed_c, "-", "-", "-", r.c_ok ? "yes" : "NO");
    }

    for (const auto& r : table.rows) {
        rep.check("c-" + r.family, r.c_ok,
                  "computed " + std::to_string(r.computed_c) + ", table " +
                      std::to_string(r.expected_c));
        if (r.k != 0)
            rep.check("t-" + r.family, r.t_ok,
                      "computed " + std::to_string(r.computed_t) + ", table " +
                          std::to_string(r.expected_t));
    }
    return rep.finish();
}

int run_bounds_solve(double g) {
    Report rep("bounds solve");
    rep.input("g", g);
    GrowthBound b = solve_growth_bound(g);
    rep.doc["result"] = json{{"g", b.g}, {"c", b.c}};
    rep.check("residual", std::abs(entropic_f(b.c) - g) <= 1e-9,
              "f(c) - g within 1e-9");
    rep.check("sanity-bound", b.c >= g / std::exp(1.0) + 0.5 - 1e-9, "c >= g/e + 1/2");
    return rep.finish();
}

int run_design_build(int s, int k, const std::string& out) {
    Report rep("design build");
    rep.input("s", s);
    rep.input("k", k);
    std::optional<CliquePacking> inner;
    if ((k == 2 && s <= 2000) || (k == 3 && s <= 10) || (k == 4 && s <= 9))
        inner = brute_force_A(s, k).witness;
    else if (s >= k)
        inner = greedy_packing(s, k);
    CliquePacking packing = construct_design_prime(s, k, inner);
    json pj = to_json(packing);
    rep.doc["result"] = json{{"blocks", packing.blocks.size()},
                             {"inner_blocks", inner ? inner->blocks.size() : 0},
                             {"digest", fnv1a_hex(pj.dump())}};
    rep.check("validates", validate_packing(packing));
    rep.check("block-count",
              packing.blocks.size() ==
                  static_cast<std::size_t>(s) * s + (inner ? k * inner->blocks.size() : 0),
              "s^2 + k * inner");
    if (!out.empty()) {
        write_json_file(pj, out);
        rep.output(out);
    }
    return rep.finish();
}

int run_design_exact(int n, int k, const std::string& out) {
    Report rep("design exact");
    rep.input("n", n);
    rep.input("k", k);
    ExactPacking ex = brute_force_A(n, k);
    json pj = to_json(ex.witness);
    rep.doc["result"] = json{{"value", ex.count}, {"digest", fnv1a_hex(pj.dump())}};
    rep.check("witness-validates", validate_packing(ex.witness));
    rep.check("witness-size",
              static_cast<long long>(ex.witness.blocks.size()) == ex.count);
    rep.check("counting-bound", ex.count <= packing_counting_bound(n, k));
    if (auto lk = lookup_A(n, k))
        rep.check("lookup-match", ex.count >= lk->first && ex.count <= lk->second,
                  "within the stored interval");
    if (!out.empty()) {
        write_json_file(pj, out);
        rep.output(out);
    }
    return rep.finish();
}

int run_color(const std::string& graph_file, const std::string& decomp_file, int k,
              bool trace, const std::string& out) {
    Report rep("color");
    rep.input_file(graph_file);
    LoadedMember m;
    m.graph = read_graph6_file(graph_file);
    if (!decomp_file.empty()) {
        m.decomp = decomposition_from_json(parse_json_file(decomp_file));
        rep.input_file(decomp_file);
    }
    PathDecomposition d = member_decomposition(m, rep);
    if (!is_valid(d, m.graph))
        throw parameter_error("decomposition does not validate against the graph");
    Coloring input = member_input_coloring(m, k, rep);
    AlmostEquitableResult r = almost_equitable_coloring(m.graph, d, input);

    const int n = m.graph.vertex_count();
    long long expected_deletions =
        n <= k ? 0
               : std::min(static_cast<long long>(d.width) * (k - 1),
                          static_cast<long long>(n - k));
    rep.doc["result"] = to_json(r.coloring);
    if (trace) {
        json traces = json::array();
        for (const auto& t : r.traces)
            traces.push_back(to_json(t));
        rep.doc["trace"] = traces;
    }
    rep.check("equitable", is_equitable(r.coloring, m.graph));
    rep.check("deletions",
              static_cast<long long>(r.coloring.deleted.size()) == expected_deletions,
              "|X| = min{p(k-1), n-k}");
    if (!out.empty()) {
        write_json_file(to_json(r.coloring), out);
        rep.output(out);
    }
    return rep.finish();
}

int run_construct_clique_union(int n, int k, const std::string& out) {
    Report rep("construct clique-union");
    rep.input("n", n);
    rep.input("k", k);
    UniversalGraph u = build_clique_union_universal(n, k);
    std::vector<Graph> members;
    for (int i = 1; i <= k; ++i)
        members.push_back(generate_clique_union(n, i));
    FamilySpec family = FamilySpec::of(members);
    for (int i = 0; i < family.t(); ++i)
        u.embeddings.emplace(member_name(family, i),
                             embed_clique_union(u, family.members[i]));
    rep.doc["result"] = json{{"host_vertices", u.host.vertex_count()}};
    report_verify(verify_universal(u, family), rep);
    emit_universal(u, out, rep);
    return rep.finish();
}

int run_construct_universal(const std::string& dir, int k, int p, const std::string& out) {
    Report rep("construct universal");
    auto members = load_family_dir(dir, rep);
    FamilySpec family = to_family(members);
    std::vector<Coloring> colorings;
    for (const auto& m : members)
        colorings.push_back(member_equitable(m, k, p, rep));

    std::optional<CliquePacking> packing;
    int s_max = 4 * k * static_cast<int>(std::ceil(std::sqrt(double(family.t())))) + k;
    for (int s = k; s <= s_max && !packing; ++s)
        packing = packing_with_blocks(s, k, family.t());
    if (!packing)
        throw capacity_error("no packing with t blocks up to s_max");

    UniversalGraph u = build_universal(family, k, p, colorings, *packing);
    rep.doc["result"] = json{{"host_vertices", u.host.vertex_count()},
                             {"s", u.construction.s}};
    report_verify(verify_universal(u, family), rep);
    emit_universal(u, out, rep);
    return rep.finish();
}

int run_construct_sqrt(const std::string& dir, int k_opt, int p_opt,
                       const std::string& out) {
    Report rep("construct sqrt");
    auto members = load_family_dir(dir, rep);
    FamilySpec family = to_family(members);

    int k = k_opt;
    if (k <= 0) {
        k = 1;
        for (const auto& m : members)
            k = std::max(k, (m.coloring ? *m.coloring : greedy_coloring(m.graph)).k());
        rep.warn("k not given, using the greedy chromatic bound " + std::to_string(k));
    }
    int p = p_opt;
    if (p < 0) {
        p = 0;
        for (const auto& m : members) {
            PathDecomposition d = member_decomposition(m, rep);
            long long need = std::min<long long>(
                static_cast<long long>(d.width) * (k - 1),
                std::max(0, m.graph.vertex_count() - k));
            p = std::max<int>(p, static_cast<int>(need));
        }
        rep.warn("p not given, using max member deletion " + std::to_string(p));
    }

    std::vector<Coloring> colorings;
    for (const auto& m : members)
        colorings.push_back(member_equitable(m, k, p, rep));
    UniversalGraph u = build_sqrt_universal(family, k, p, colorings);
    rep.doc["result"] = json{{"host_vertices", u.host.vertex_count()},
                             {"s", u.construction.s},
                             {"k", k},
                             {"p", p}};
    report_verify(verify_universal(u, family), rep);
    emit_universal(u, out, rep);
    return rep.finish();
}

int run_verify(const std::string& universal_prefix, const std::string& dir) {
    Report rep("verify");
    std::string g6_path = universal_prefix;
    std::string side_path;
    if (fs::exists(universal_prefix + ".g6")) {
        g6_path = universal_prefix + ".g6";
        side_path = universal_prefix + ".json";
    } else {
        side_path = fs::path(universal_prefix).replace_extension(".json").string();
    }
    rep.input_file(g6_path);
    rep.input_file(side_path);
    UniversalGraph u =
        universal_from_parts(read_graph6_file(g6_path), parse_json_file(side_path));
    auto members = load_family_dir(dir, rep);
    report_verify(verify_universal(u, to_family(members)), rep);
    return rep.finish();
}

int run_oracle_min_universal(const std::string& dir, const std::string& out) {
    Report rep("oracle min-universal");
    auto members = load_family_dir(dir, rep);
    MinUniversalResult r = min_universal_size(to_family(members), budget_from_env());
    rep.doc["result"] = json{{"exact", r.exact},
                             {"size", r.size},
                             {"states", r.states}};
    if (r.witness) {
        rep.doc["result"]["witness"] = to_graph6(*r.witness);
        if (!out.empty()) {
            write_graph6_file(*r.witness, out);
            rep.output(out);
        }
    }
    rep.check("exact", r.exact,
              r.exact ? "minimum found" : "budget exceeded, result is a lower bound");
    return rep.finish();
}

int run_oracle_min_deletion(const std::string& graph_file, int k) {
    Report rep("oracle min-deletion");
    rep.input_file(graph_file);
    rep.input("k", k);
    Graph g = read_graph6_file(graph_file);
    MinDeletionResult r = min_equitable_deletion(g, k, budget_from_env());
    rep.doc["result"] = json{{"exact", r.exact},
                             {"deletions", r.deletions},
                             {"states", r.states}};
    rep.check("exact", r.exact,
              r.exact ? "minimum found" : "budget exceeded, result is a lower bound");
    return rep.finish();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universo: induced-universal graphs via block designs and "
                 "almost-equitable colorings"};
    app.require_subcommand(1);
    int seed = 0;
    app.add_option("--seed", seed, "seed for randomized operations (default 0)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower-bound calculators");
    bounds->require_subcommand(1);
    auto* bounds_table = bounds->add_subcommand("table", "reproduce the embedded tables");
    double solve_g = 0;
    auto* bounds_solve = bounds->add_subcommand("solve", "solve c^c/(c-1)^(c-1) = g");
    bounds_solve->add_option("--g", solve_g, "growth constant")->required();

    // design
    auto* design = app.add_subcommand("design", "edge-disjoint clique packings");
    design->require_subcommand(1);
    int d_s = 0, d_k = 0, d_n = 0;
    std::string d_out, e_out;
    auto* design_build = design->add_subcommand("build", "prime group construction");
    design_build->add_option("--s", d_s, "prime group size")->required();
    design_build->add_option("--k", d_k, "block size")->required();
    design_build->add_option("--out", d_out, "packing json output");
    auto* design_exact = design->add_subcommand("exact", "exact A value by branch and bound");
    design_exact->add_option("--n", d_n, "ground set size")->required();
    design_exact->add_option("--k", d_k, "block size")->required();
    design_exact->add_option("--out", e_out, "packing json output");

    // color
    auto* color = app.add_subcommand("color", "almost-equitable coloring pipeline");
    std::string c_graph, c_decomp, c_out;
    int c_k = 2;
    bool c_trace = false;
    color->add_option("--graph", c_graph, "graph6 file")->required();
    color->add_option("--decomp", c_decomp, "path decomposition json");
    color->add_option("--k", c_k, "number of colors")->required();
    color->add_flag("--trace", c_trace, "export rebalance traces");
    color->add_option("--out", c_out, "coloring json output");

    // construct
    auto* construct = app.add_subcommand("construct", "universal-graph constructions");
    construct->require_subcommand(1);
    int cu_n = 0, cu_k = 0;
    std::string cu_out;
    auto* c_clique = construct->add_subcommand("clique-union", "host for clique unions");
    c_clique->add_option("--n", cu_n, "vertex budget")->required();
    c_clique->add_option("--k", cu_k, "max clique size")->required();
    c_clique->add_option("--out", cu_out, "output prefix (.g6 + .json)");
    std::string f_dir, f_out;
    int f_k = 2, f_p = 0;
    auto* c_univ = construct->add_subcommand("universal", "block-design host for a family");
    c_univ->add_option("--family", f_dir, "family directory")->required();
    c_univ->add_option("--k", f_k, "colors")->required();
    c_univ->add_option("--p", f_p, "deletion budget per member")->required();
    c_univ->add_option("--out", f_out, "output prefix");
    std::string s_dir, s_out;
    int s_k = -1, s_p = -1;
    auto* c_sqrt = construct->add_subcommand("sqrt", "sqrt(t)-size host for a family");
    c_sqrt->add_option("--family", s_dir, "family directory")->required();
    c_sqrt->add_option("--k", s_k, "colors (default: greedy bound)");
    c_sqrt->add_option("--p", s_p, "deletion budget (default: max member deletion)");
    c_sqrt->add_option("--out", s_out, "output prefix");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a universal-graph artifact");
    std::string v_universal, v_dir;
    verify->add_option("--universal", v_universal, "artifact prefix or .g6 path")->required();
    verify->add_option("--family", v_dir, "family directory")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle->require_subcommand(1);
    std::string o_dir, o_out, o_graph;
    int o_k = 2;
    auto* o_min = oracle->add_subcommand("min-universal", "minimum universal size");
    o_min->add_option("--family", o_dir, "family directory")->required();
    o_min->add_option("--out", o_out, "witness graph6 output");
    auto* o_del = oracle->add_subcommand("min-deletion", "minimum equitable deletion");
    o_del->add_option("--graph", o_graph, "graph6 file")->required();
    o_del->add_option("--k", o_k, "colors")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bounds_table)
            return run_bounds_table();
        if (*bounds_solve)
            return run_bounds_solve(solve_g);
        if (*design_build)
            return run_design_build(d_s, d_k, d_out);
        if (*design_exact)
            return run_design_exact(d_n, d_k, e_out);
        if (*color)
            return run_color(c_graph, c_decomp, c_k, c_trace, c_out);
        if (*c_clique)
            return run_construct_clique_union(cu_n, cu_k, cu_out);
        if (*c_univ)
            return run_construct_universal(f_dir, f_k, f_p, f_out);
        if (*c_sqrt)
            return run_construct_sqrt(s_dir, s_k, s_p, s_out);
        if (*verify)
            return run_verify(v_universal, v_dir);
        if (*o_min)
            return run_oracle_min_universal(o_dir, o_out);
        if (*o_del)
            return run_oracle_min_deletion(o_graph, o_k);
    } catch (const std::exception& e) {
        const char* kind = "error";
        if (dynamic_cast<const parameter_error*>(&e))
            kind = "parameter_error";
        else if (dynamic_cast<const contract_error*>(&e))
            kind = "contract_error";
        else if (dynamic_cast<const classification_error*>(&e))
            kind = "classification_error";
        else if (dynamic_cast<const capacity_error*>(&e))
            kind = "capacity_error";
        else if (dynamic_cast<const domain_error*>(&e))
            kind = "domain_error";
        json err{{"error", kind}, {"message", e.what()}};
        std::cerr << err.dump(2) << std::endl;
        return 2;
    }
    std::cerr << json{{"error", "usage"}, {"message", "no subcommand"}}.dump(2) << std::endl;
    return 2;
}
