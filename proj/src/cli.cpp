// Subcommand plumbing: construct, verify, satnum, codes, pj, and table.
//
// Every machine-readable artifact is JSON with a top-level "schema": 1 and
// insertion-ordered keys, so fixed arguments always produce byte-identical
// output.  Rationals serialize as "p/q" strings, graphs export through the
// dim-headed edge-list format or DOT, and reports returned by construct
// --verify reuse the same serializer as the verify subcommand.

#include "qsat/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsat/bounds.hpp"
#include "qsat/codes.hpp"
#include "qsat/constructions.hpp"
#include "qsat/saturation.hpp"

namespace qsat {

namespace {

using json = nlohmann::ordered_json;

// ----- serializers -----

json rational_json(const Rational& r) {
    if (r.is_integer()) return json(r.num);
    return json(r.str());
}

json saturation_json(const SaturationReport& r, int dim) {
    json j;
    j["schema"] = 1;
    j["free"] = r.free;
    j["saturated"] = r.saturated;
    j["edges"] = r.edges;
    json fails = json::array();
    for (auto [u, v] : r.failing_edges)
        fails.push_back({vertex_string(u, dim), vertex_string(v, dim)});
    j["failing_edges"] = fails;
    if (r.witness) {
        json w = json::array();
        for (vertex_t v : *r.witness) w.push_back(vertex_string(v, dim));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json report_json(const BoundReport& r) {
    json j;
    j["schema"] = 1;
    j["tree"] = r.tree;
    j["method"] = r.method;
    j["n"] = r.n;
    j["base_dim"] = r.base_dim;
    j["status"] = r.status;
    j["edges"] = r.edges;
    j["formula"] = rational_json(r.formula);
    j["proof_count"] = r.proof_count ? rational_json(*r.proof_count) : json(nullptr);
    j["verified"] = r.verified ? json(*r.verified) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

json interval_json(const SatInterval& s) {
    json j;
    j["schema"] = 1;
    j["tree"] = s.tree;
    j["n"] = s.n;
    j["lower"] = rational_json(s.lower);
    j["upper"] = s.upper ? json(*s.upper) : json(nullptr);
    j["upper_method"] = s.upper ? json(s.upper_method) : json(nullptr);
    j["exact"] = s.exact ? json(*s.exact) : json(nullptr);
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ----- construct -----

void export_graph(const CubeSubgraph& g, const json& report, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot open output file '" + path + "'");
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".dot") == 0)
        f << to_dot(g);
    else if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        f << report.dump(2) << "\n";
    else
        f << to_edge_list(g);
}

int cmd_construct(const std::string& tree, int n, const std::string& method,
                  const std::string& out_file, bool verify, std::ostream& out,
                  std::ostream& err) {
    auto all = applicable_constructions(tree, n);
    Construction* chosen = nullptr;
    if (method == "auto") {
        for (auto& c : all)
            if (c.graph) {
                chosen = &c;
                break;
            }
    } else {
        for (auto& c : all)
            if (c.report.method == method) {
                chosen = &c;
                break;
            }
        if (!chosen) {
            err << "method '" << method << "' does not apply to " << tree << "\n";
            return 2;
        }
    }
    if (chosen && !chosen->graph) {
        emit(out, report_json(chosen->report));
        return 1;
    }
    if (!chosen) {
        json j;
        j["schema"] = 1;
        j["constructions"] = json::array();
        for (auto& c : all) j["constructions"].push_back(report_json(c.report));
        emit(out, j);
        return 1;
    }
    SaturationReport sat;
    if (verify) sat = verify_construction(*chosen, parse_tree(tree));
    json report = report_json(chosen->report);
    if (verify) report["verification"] = saturation_json(sat, chosen->graph->dim());
    if (!out_file.empty()) export_graph(*chosen->graph, report, out_file);
    emit(out, report);
    return verify && !*chosen->report.verified ? 1 : 0;
}

// ----- verify -----

int cmd_verify(const std::string& graph_file, const std::string& tree, std::ostream& out) {
    std::ifstream f(graph_file, std::ios::binary);
    if (!f) throw error("cannot open graph file '" + graph_file + "'");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CubeSubgraph g = from_edge_list(text);
    SaturationReport r = is_saturated(g, parse_tree(tree));
    emit(out, saturation_json(r, g.dim()));
    return r.saturated ? 0 : 1;
}

// ----- codes -----

int cmd_codes(const std::string& kind, int n, int s, std::ostream& out) {
    DominatingSet c;
    if (kind == "hamming") {
        int i = 0;
        while ((1 << (i + 1)) - 1 < n) ++i;
        if ((1 << (i + 1)) - 1 != n || i + 1 < 2 || i + 1 > 4)
            throw error("hamming codes live in Q_3, Q_7, or Q_15");
        c = hamming_code(i + 1);
    } else {
        if (s <= 0) throw error("weichsel sets need --s");
        c = weichsel_pds(n, s);
    }
    for (vertex_t v : c.members) out << vertex_string(v, c.dim) << "\n";
    PdsReport r = verify_pds(c);
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["n"] = c.dim;
    j["r"] = c.r;
    j["members"] = c.members.size();
    j["perfect"] = r.perfect;
    j["components_ok"] = r.components_ok;
    j["component_count"] = r.component_count;
    emit(out, j);
    return r.perfect && r.components_ok ? 0 : 1;
}

// ----- pj -----

int cmd_pj(int jj, int k, bool conjecture, std::ostream& out) {
    json j;
    j["schema"] = 1;
    j["j"] = jj;
    j["k"] = k;
    if (conjecture) {
        PjPrediction p = conjecture_pj(jj, k);
        j["even_nonzero"] = p.e_count;
        j["odd"] = p.o_count;
        j["a"] = p.a;
        j["b"] = p.b;
        j["predicted"] = p.predicted;
        j["actual"] = p.actual ? json(*p.actual) : json(nullptr);
        j["agrees"] = p.agrees ? json(*p.agrees) : json(nullptr);
    } else {
        j["value"] = pj_qk(jj, k);
    }
    emit(out, j);
    return 0;
}

// ----- table -----

int cmd_table(const std::string& family, int n, const std::string& range,
              const std::string& degrees, const std::string& format, std::ostream& out) {
    std::vector<std::string> literals;
    if (family == "caterpillars") {
        if (degrees.empty()) throw error("caterpillar tables need --degrees \"3,3;4,4,3\"");
        std::stringstream ss(degrees);
        std::string one;
        while (std::getline(ss, one, ';'))
            if (!one.empty()) literals.push_back("cat:" + one);
    } else {
        auto colon = range.find(':');
        if (colon == std::string::npos) throw error("--range must be lo:hi");
        int lo = std::stoi(range.substr(0, colon)), hi = std::stoi(range.substr(colon + 1));
        if (lo < 1 || hi < lo) throw error("--range must be lo:hi with 1 <= lo <= hi");
        std::string prefix = family == "paths" ? "path:" : "star:";
        for (int k = lo; k <= hi; ++k) literals.push_back(prefix + std::to_string(k));
    }
    std::vector<SatInterval> rows;
    for (auto& lit : literals) rows.push_back(satnum(lit, n));
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        j["rows"] = json::array();
        for (auto& r : rows) j["rows"].push_back(interval_json(r));
        emit(out, j);
        return 0;
    }
    out << "tree             lower        upper   method       exact\n";
    for (auto& r : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%-16s %-12s %-7s %-12s %s\n", r.tree.c_str(),
                      r.lower.str().c_str(),
                      r.upper ? std::to_string(*r.upper).c_str() : "-",
                      r.upper ? r.upper_method.c_str() : "-",
                      r.exact ? std::to_string(*r.exact).c_str() : "-");
        out << line;
    }
    return 0;
}

}  // namespace

// ----- entry point -----

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tree-saturated subgraphs of the hypercube"};
    app.require_subcommand(1);

    std::string tree, method = "auto", out_file, graph_file, kind, range = "2:6", degrees;
    std::string family, format = "text";
    int n = 0, s = 0, jj = 0, k = 0;
    bool verify = false, conjecture = false;

    auto methods = {"auto", "subcube", "path", "star", "doublestar",
                    "multistar", "caterpillar", "genstar", "vgs"};

    auto* construct = app.add_subcommand("construct", "build a saturated subgraph");
    construct->add_option("--tree", tree, "tree literal, e.g. path:5")->required();
    construct->add_option("--n", n, "cube dimension")->required();
    construct->add_option("--method", method, "construction to use")
        ->check(CLI::IsMember(methods));
    construct->add_option("--out", out_file, "edges.txt, graph.dot, or report.json");
    construct->add_flag("--verify", verify, "re-check saturation exhaustively");

    auto* verify_cmd = app.add_subcommand("verify", "check a graph file for saturation");
    verify_cmd->add_option("--graph", graph_file, "edge-list file")->required();
    verify_cmd->add_option("--tree", tree, "tree literal")->required();

    auto* satnum_cmd = app.add_subcommand("satnum", "bracket the saturation number");
    satnum_cmd->add_option("--tree", tree, "tree literal")->required();
    satnum_cmd->add_option("--n", n, "cube dimension")->required();

    auto* codes = app.add_subcommand("codes", "emit a perfect dominating set");
    codes->add_option("--kind", kind, "hamming or weichsel")
        ->required()
        ->check(CLI::IsMember({"hamming", "weichsel"}));
    codes->add_option("--n", n, "cube dimension")->required();
    codes->add_option("--s", s, "weichsel code order");

    auto* pj = app.add_subcommand("pj", "disjoint paths from one vertex");
    pj->add_option("--j", jj, "number of paths")->required();
    pj->add_option("--k", k, "cube dimension")->required();
    pj->add_flag("--conjecture", conjecture, "compare with the counting prediction");

    auto* table = app.add_subcommand("table", "bound table for a family");
    table->add_option("--family", family, "paths, stars, or caterpillars")
        ->required()
        ->check(CLI::IsMember({"paths", "stars", "caterpillars"}));
    table->add_option("--n", n, "cube dimension")->required();
    table->add_option("--range", range, "k range lo:hi for paths/stars");
    table->add_option("--degrees", degrees, "semicolon-separated degree lists");
    table->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(construct))
            return cmd_construct(tree, n, method, out_file, verify, out, err);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(graph_file, tree, out);
        if (app.got_subcommand(satnum_cmd)) {
            emit(out, interval_json(satnum(tree, n)));
            return 0;
        }
        if (app.got_subcommand(codes)) return cmd_codes(kind, n, s, out);
        if (app.got_subcommand(pj)) return cmd_pj(jj, k, conjecture, out);
        if (app.got_subcommand(table)) return cmd_table(family, n, range, degrees, format, out);
    } catch (const hypothesis_error& e) {
        err << "hypothesis: " << e.what() << "\n";
        return 1;
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qsat
