#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mptg/builder.hpp"
#include "mptg/errors.hpp"
#include "mptg/families.hpp"
#include "mptg/graph.hpp"
#include "mptg/json_io.hpp"
#include "mptg/orderings.hpp"
#include "mptg/rational.hpp"
#include "mptg/recognition.hpp"
#include "mptg/render.hpp"
#include "mptg/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mptg;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContractError("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContractError("cannot open " + path + " for writing");
    out << data;
}

Graph load_graph(const std::string& path) { return parse_graph_text(read_input(path)); }

// Vertices appear in output as v<k> with k = file id + 1, matching the ids
// used in representation JSON and SVG labels. Raw id lists stay 0-based so
// they can be fed back into --ordering.
std::string vname(int v) { return "v" + std::to_string(v + 1); }

std::string id_list(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string vname_set(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += vname(xs[i]);
    }
    return out + "}";
}

VertexOrdering parse_ordering_arg(std::string text, int n) {
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream in(text);
    VertexOrdering sigma;
    int v;
    while (in >> v) sigma.perm.push_back(v);
    if (!in.eof()) throw ContractError("ordering must be a list of integers");
    sigma.validate(n);
    return sigma;
}

std::vector<int> parse_leg_counts(std::string text) {
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream in(text);
    std::vector<int> legs;
    int v;
    while (in >> v) legs.push_back(v);
    if (!in.eof() || legs.empty())
        throw ContractError("--legs must be a comma-separated list of leaf counts");
    return legs;
}

void print_witness_mapping(std::ostream& out, const ViolationWitness& w,
                           const VertexOrdering& sigma) {
    out << "  " << w.describe() << "\n";
    for (int pos : w.positions)
        out << "  position " << (pos + 1) << " holds " << vname(sigma.perm[static_cast<std::size_t>(pos)])
            << " (id " << sigma.perm[static_cast<std::size_t>(pos)] << ")\n";
}

json witness_json(const ViolationWitness& w, const VertexOrdering& sigma) {
    json node;
    node["condition"] = condition_name(w.condition);
    node["positions"] = w.positions;
    std::vector<int> verts;
    for (int pos : w.positions) verts.push_back(sigma.perm[static_cast<std::size_t>(pos)]);
    node["vertex_ids"] = verts;
    if (w.cell) node["cell"] = {w.cell->first, w.cell->second};
    node["description"] = w.describe();
    return node;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& graph_path, bool json_out, int bound, int pbound) {
    const Graph g = load_graph(graph_path);
    json report;
    report["graph"] = {{"vertices", g.size()}, {"edges", g.edge_count()}};
    report["classes"] = json::object();
    std::ostringstream text;
    text << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";

    auto emit = [&](const std::string& cls, const std::string& verdict,
                    const std::string& detail, json extra = json::object()) {
        text << cls << ": " << verdict;
        if (!detail.empty()) text << "  [" << detail << "]";
        text << "\n";
        extra["verdict"] = verdict;
        json node;
        node["verdict"] = verdict;
        for (auto& [k, v] : extra.items())
            if (k != "verdict") node[k] = v;
        report["classes"][cls] = node;
    };

    auto search_class = [&](const std::string& cls, RecognitionResult (*search)(const Graph&, int),
                            const std::string& non_member_detail) -> std::optional<RecognitionResult> {
        try {
            RecognitionResult r = search(g, bound);
            if (r.member) {
                json extra;
                extra["ordering"] = r.ordering->perm;
                emit(cls, "member", "ordering ids: " + id_list(r.ordering->perm), extra);
            } else {
                emit(cls, "non-member", non_member_detail);
            }
            return r;
        } catch (const BoundExceeded& e) {
            emit(cls, "unknown", std::string("search refused: ") + e.what());
            return std::nullopt;
        }
    };

    auto mptg_r = search_class("mptg", &find_mptg_ordering, "no ordering passes the 4-point condition");
    auto proper_r =
        search_class("proper-mptg", &find_proper_mptg_ordering, "no proper MPTG ordering exists");
    (void)mptg_r;

    if (proper_r) {
        json extra;
        extra["note"] = "class coincides with proper-mptg";
        emit("unit-mptg", proper_r->member ? "member" : "non-member",
             "coincides with proper MPTG", extra);
    } else {
        emit("unit-mptg", "unknown", "coincides with proper MPTG; that search was refused");
    }

    if (auto at = find_asteroidal_triple(g)) {
        json extra;
        extra["triple"] = {at->u, at->v, at->w};
        emit("at-free", "non-member", "asteroidal triple " + vname_set({at->u, at->v, at->w}),
             extra);
    } else {
        emit("at-free", "member", "");
    }

    try {
        if (auto bad = is_perfect_bruteforce(g, pbound)) {
            json extra;
            extra["vertices"] = bad->vertices;
            extra["chromatic"] = bad->chromatic;
            extra["clique"] = bad->clique;
            emit("perfect", "non-member",
                 "induced " + vname_set(bad->vertices) + ": chromatic " +
                     std::to_string(bad->chromatic) + " > clique " + std::to_string(bad->clique),
                 extra);
        } else {
            emit("perfect", "member", "");
        }
    } catch (const BoundExceeded& e) {
        emit("perfect", "unknown", std::string("check refused: ") + e.what());
    }

    try {
        RecognitionResult r = find_proper_maxtol_ordering(g, bound);
        if (r.member) {
            json extra;
            extra["ordering"] = r.ordering->perm;
            extra["note"] = "necessary condition satisfiable; membership undecided";
            emit("proper-maxtol-necessary", "unknown",
                 "necessary condition satisfiable (ordering ids: " + id_list(r.ordering->perm) +
                     "); membership undecided",
                 extra);
        } else {
            emit("proper-maxtol-necessary", "non-member",
                 "condition unsatisfiable: not a proper max-tolerance graph");
        }
    } catch (const BoundExceeded& e) {
        emit("proper-maxtol-necessary", "unknown", std::string("search refused: ") + e.what());
    }

    if (json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

// --------------------------------------------------------------- recognize

int cmd_recognize(const std::string& graph_path, const std::string& cls, int bound_flag,
                  bool json_out) {
    const Graph g = load_graph(graph_path);
    json out;
    out["class"] = cls;

    auto finish = [&](bool pass, const std::string& line) {
        if (json_out) {
            out["verdict"] = pass ? "member" : "non-member";
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << line << "\n";
        }
        return pass ? 0 : 1;
    };

    if (cls == "at-free") {
        if (auto at = find_asteroidal_triple(g)) {
            out["triple"] = {at->u, at->v, at->w};
            return finish(false, "non-member: asteroidal triple " + vname_set({at->u, at->v, at->w}));
        }
        return finish(true, "member: no asteroidal triple");
    }

    if (cls == "perfect") {
        const int bound = bound_flag > 0 ? bound_flag : kDefaultPerfectionBound;
        if (auto bad = is_perfect_bruteforce(g, bound)) {
            out["vertices"] = bad->vertices;
            out["chromatic"] = bad->chromatic;
            out["clique"] = bad->clique;
            return finish(false, "non-member: induced " + vname_set(bad->vertices) +
                                     " has chromatic number " + std::to_string(bad->chromatic) +
                                     " but clique number " + std::to_string(bad->clique));
        }
        return finish(true, "member: every induced subgraph has chromatic number equal to clique number");
    }

    const int bound = bound_flag > 0 ? bound_flag : kDefaultSearchBound;
    RecognitionResult r;
    std::string member_line, non_member_line;
    if (cls == "mptg") {
        r = find_mptg_ordering(g, bound);
        member_line = "member: MPTG ordering found";
        non_member_line = "non-member: no ordering passes the 4-point condition";
    } else if (cls == "proper-mptg" || cls == "unit-mptg") {
        r = find_proper_mptg_ordering(g, bound);
        member_line = "member: proper MPTG ordering found";
        non_member_line = "non-member: no proper MPTG ordering exists";
        if (cls == "unit-mptg") out["note"] = "class coincides with proper-mptg";
    } else {  // proper-maxtol-cond
        r = find_proper_maxtol_ordering(g, bound);
        member_line =
            "pass: necessary condition satisfiable (not a membership certificate)";
        non_member_line =
            "non-member: condition unsatisfiable, so the graph is not a proper max-tolerance graph";
    }
    std::cerr << "search: " << r.stats.nodes << " placements, " << r.stats.prunes << " pruned\n";
    out["stats"] = {{"placements", r.stats.nodes}, {"pruned", r.stats.prunes}};
    if (r.necessary_condition_only) out["necessary_condition_only"] = true;
    if (r.member) {
        out["ordering"] = r.ordering->perm;
        return finish(true, member_line + "\nordering ids: " + id_list(r.ordering->perm));
    }
    return finish(false, non_member_line);
}

// ----------------------------------------------------------- check-ordering

int cmd_check_ordering(const std::string& graph_path, const std::string& condition,
                       const std::string& ordering_str, bool json_out) {
    const Graph g = load_graph(graph_path);
    const VertexOrdering sigma = ordering_str.empty()
                                     ? VertexOrdering::identity(g.size())
                                     : parse_ordering_arg(ordering_str, g.size());
    const AugmentedMatrix m(g, sigma);

    CheckResult res;
    if (condition == "4-point" || condition == "mptg")
        res = check_4point(m);
    else if (condition == "non-edge")
        res = check_nonedge_condition(m);
    else if (condition == "matrix-zero")
        res = check_matrix_zero_condition(m);
    else if (condition == "3-point")
        res = check_3point(m);
    else if (condition == "5-point-1")
        res = check_5point_1(m);
    else if (condition == "5-point-2")
        res = check_5point_2(m);
    else if (condition == "6-point")
        res = check_6point(m);
    else if (condition == "proper-maxtol")
        res = check_proper_maxtol_ordering(m);
    else  // proper-mptg
        res = check_proper_mptg_ordering(m);

    json out;
    out["condition"] = condition;
    out["ordering"] = sigma.perm;
    if (!res) {
        if (json_out) {
            out["verdict"] = "pass";
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "pass: condition " << condition << " holds for this ordering\n";
        }
        return 0;
    }
    if (json_out) {
        out["verdict"] = "violation";
        out["witness"] = witness_json(*res, sigma);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "violation:\n";
        print_witness_mapping(std::cout, *res, sigma);
    }
    return 1;
}

// ---------------------------------------------------------------- build-rep

int cmd_build_rep(const std::string& graph_path, const std::string& ordering_str, bool unit,
                  const std::string& length_str, const std::string& out_path, bool show_sequence,
                  int bound_flag) {
    const Graph g = load_graph(graph_path);
    const int bound = bound_flag > 0 ? bound_flag : kDefaultSearchBound;

    VertexOrdering sigma;
    if (!ordering_str.empty()) {
        sigma = parse_ordering_arg(ordering_str, g.size());
        const AugmentedMatrix probe(g, sigma);
        if (auto w = check_proper_mptg_ordering(probe)) {
            std::cerr << "error: not a proper MPTG ordering\n";
            print_witness_mapping(std::cerr, *w, sigma);
            return 1;
        }
    } else {
        RecognitionResult r = find_proper_mptg_ordering(g, bound);
        if (!r.member) {
            std::cerr << "error: no proper MPTG ordering exists for this graph\n";
            return 1;
        }
        sigma = *r.ordering;
        std::cerr << "using ordering ids: " << id_list(sigma.perm) << "\n";
    }

    const AugmentedMatrix m(g, sigma);
    const PrecedenceRelation prec = precedes(m);
    const CanonicalSequence seq = canonical_sequence(m, prec);
    if (show_sequence) {
        std::vector<int> border = prec.b_order();
        std::string bs;
        for (std::size_t i = 0; i < border.size(); ++i) {
            if (i) bs += " ";
            bs += "b" + std::to_string(border[i] + 1);
        }
        std::cerr << "b-order (positions): " << bs << "\n";
        std::cerr << "sequence (positions): " << seq.to_string() << "\n";
    }
    const IntervalPointRep positioned = unit ? realize_unit(seq, parse_rational(length_str))
                                             : realize_integer(seq);
    const IntervalPointRep rep = apply_ordering(positioned, sigma);

    // built output always re-verifies before leaving the process
    if (!certify(rep, g).empty()) {
        std::cerr << "internal error: built representation failed certification\n";
        return 2;
    }
    write_output(out_path, to_json(rep));
    return 0;
}

// --------------------------------------------------------------- verify-rep

int cmd_verify_rep(const std::string& rep_path, const std::string& graph_path,
                   const std::string& semantics, bool json_out) {
    const AnyRep rep = parse_representation(read_input(rep_path));
    const Graph g = load_graph(graph_path);
    const bool is_point = std::holds_alternative<IntervalPointRep>(rep);
    const std::string kind = is_point ? "mptg" : "maxtol";
    if (!semantics.empty() && semantics != kind)
        throw ContractError("representation uses " + kind + " semantics (" +
                            (is_point ? "\"p\"" : "\"t\"") + " entries) but --semantics " +
                            semantics + " was requested");

    if (!is_point) {
        for (int v : std::get<ToleranceRep>(rep).tolerance_warnings())
            std::cerr << "warning: tolerance of " << vname(v)
                      << " exceeds its interval length\n";
    }

    const std::vector<EdgeMismatch> bad =
        is_point ? certify(std::get<IntervalPointRep>(rep), g)
                 : certify(std::get<ToleranceRep>(rep), g);

    json out;
    out["semantics"] = kind;
    if (bad.empty()) {
        if (json_out) {
            out["verdict"] = "pass";
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "pass: representation induces the graph exactly (" << g.size()
                      << " vertices, " << g.edge_count() << " edges)\n";
        }
        return 0;
    }
    if (json_out) {
        out["verdict"] = "mismatch";
        out["mismatches"] = json::array();
        for (const EdgeMismatch& m : bad)
            out["mismatches"].push_back({{"u", m.u}, {"v", m.v}, {"in_graph", m.in_graph}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const EdgeMismatch& m : bad) {
            if (m.in_graph)
                std::cout << "mismatch: edge " << vname(m.u) << "-" << vname(m.v)
                          << " required by the graph is not induced\n";
            else
                std::cout << "mismatch: induced edge " << vname(m.u) << "-" << vname(m.v)
                          << " is not in the graph\n";
        }
    }
    return 1;
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const std::string& family, int m, int n, const std::string& eps_str,
            const std::string& legs_str, const std::string& what, const std::string& out_path) {
    Graph g;
    std::optional<std::variant<IntervalPointRep, ToleranceRep>> rep;

    if (family == "kn") {
        if (n <= 0) throw ContractError("kn needs --n >= 1");
        g = make_complete(n);
        rep = gen_Kn_proper_mptg(n);
    } else if (family == "kmn") {
        if (m <= 0 || n <= 0) throw ContractError("kmn needs --m >= 1 and --n >= 1");
        g = make_complete_bipartite(m, n);
        rep = gen_Kmn_mptg(m, n, parse_rational(eps_str));
    } else if (family == "caterpillar") {
        const std::vector<int> legs = parse_leg_counts(legs_str);
        g = make_caterpillar(legs);
        rep = gen_caterpillar_proper_mptg(legs);
    } else if (family.rfind("fixture:", 0) == 0) {
        const Fixture& f = fixture(family.substr(8));
        g = f.graph;
        rep = f.rep;
    } else {
        throw ContractError("unknown family " + family +
                            " (expected kn, kmn, caterpillar or fixture:<name>)");
    }

    if (what == "graph") {
        write_output(out_path, format_graph(g));
    } else {
        write_output(out_path,
                     std::visit([](const auto& r) { return to_json(r); }, *rep));
    }
    return 0;
}

// --------------------------------------------------------------- render-svg

int cmd_render_svg(const std::string& rep_path, const std::string& out_path) {
    const AnyRep rep = parse_representation(read_input(rep_path));
    write_output(out_path, std::visit([](const auto& r) { return render_svg(r); }, rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognition, construction and verification of interval-plus-point graph representations"};
    app.require_subcommand(1);

    std::string graph_path, rep_path, out_path, ordering_str, condition, cls, semantics;
    std::string family, eps_str = "1/2", legs_str, what = "rep", length_str = "1";
    int bound = 0, pbound = kDefaultPerfectionBound, m = 0, n = 0;
    bool json_out = false, unit = false, show_sequence = false;

    auto* classify = app.add_subcommand("classify", "Report class membership verdicts for a graph");
    classify->add_option("graph", graph_path, "graph file (- for stdin)")->required();
    classify->add_flag("--json", json_out, "machine-readable output");
    classify->add_option("--bound", bound, "vertex bound for ordering searches (default 11)");
    classify->add_option("--perfection-bound", pbound, "vertex bound for the perfection check (default 10)");

    auto* recognize = app.add_subcommand("recognize", "Search one class; exit 0 member, 1 non-member");
    recognize->add_option("graph", graph_path, "graph file (- for stdin)")->required();
    recognize->add_option("--class", cls, "class to test")
        ->required()
        ->check(CLI::IsMember({"mptg", "proper-mptg", "unit-mptg", "proper-maxtol-cond", "at-free", "perfect"}));
    recognize->add_option("--bound", bound, "vertex bound override");
    recognize->add_flag("--json", json_out, "machine-readable output");

    auto* check = app.add_subcommand("check-ordering", "Test one condition on a fixed vertex ordering");
    check->add_option("graph", graph_path, "graph file (- for stdin)")->required();
    check->add_option("--condition", condition, "condition name")
        ->required()
        ->check(CLI::IsMember({"4-point", "non-edge", "matrix-zero", "3-point", "5-point-1",
                               "5-point-2", "6-point", "proper-maxtol", "mptg", "proper-mptg"}));
    check->add_option("--ordering", ordering_str,
                      "vertex ids in order, e.g. \"2 0 1\" (default: identity)");
    check->add_flag("--json", json_out, "machine-readable output");

    auto* build = app.add_subcommand("build-rep", "Construct a certified representation");
    build->add_option("graph", graph_path, "graph file (- for stdin)")->required();
    build->add_option("--ordering", ordering_str,
                      "proper MPTG ordering to realize (default: search for one)");
    build->add_flag("--unit", unit, "equal-length intervals");
    build->add_option("--length", length_str, "interval length for --unit (default 1)");
    build->add_flag("--show-sequence", show_sequence, "print the endpoint sequence to stderr");
    build->add_option("--bound", bound, "vertex bound for the ordering search");
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify-rep", "Check a representation against a graph");
    verify->add_option("rep", rep_path, "representation JSON (- for stdin)")->required();
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--semantics", semantics, "expected semantics")
        ->check(CLI::IsMember({"mptg", "maxtol"}));
    verify->add_flag("--json", json_out, "machine-readable output");

    auto* gen = app.add_subcommand("gen", "Emit a generated family member or a stored fixture");
    gen->add_option("--family", family, "kn | kmn | caterpillar | fixture:<name>")->required();
    gen->add_option("--m", m, "left part size (kmn)");
    gen->add_option("--n", n, "size (kn) or right part size (kmn)");
    gen->add_option("--eps", eps_str, "nesting margin for kmn, rational in (0,1)");
    gen->add_option("--legs", legs_str, "caterpillar leaf counts, e.g. \"2,0,1\"");
    gen->add_option("--what", what, "rep (default) or graph")
        ->check(CLI::IsMember({"rep", "graph"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* render = app.add_subcommand("render-svg", "Draw a representation as SVG");
    render->add_option("rep", rep_path, "representation JSON (- for stdin)")->required();
    render->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(graph_path, json_out, bound > 0 ? bound : kDefaultSearchBound, pbound);
        if (app.got_subcommand(recognize)) return cmd_recognize(graph_path, cls, bound, json_out);
        if (app.got_subcommand(check)) return cmd_check_ordering(graph_path, condition, ordering_str, json_out);
        if (app.got_subcommand(build))
            return cmd_build_rep(graph_path, ordering_str, unit, length_str, out_path, show_sequence, bound);
        if (app.got_subcommand(verify)) return cmd_verify_rep(rep_path, graph_path, semantics, json_out);
        if (app.got_subcommand(gen)) return cmd_gen(family, m, n, eps_str, legs_str, what, out_path);
        if (app.got_subcommand(render)) return cmd_render_svg(rep_path, out_path);
    } catch (const BoundExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
