#include "commands.hpp"

#include "psalg/evidence.hpp"
#include "psalg/graphs.hpp"
#include "psalg/hypergraphs.hpp"
#include "psalg/io.hpp"
#include "psalg/nilalg.hpp"
#include "psalg/tutte.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace psalg::cli {

using nlohmann::json;

namespace {

struct Options {
    bool table = false;
    std::vector<std::size_t> order;

    std::string input;
    std::string second_input;
    std::string bijection_file;
    std::string kind = "forest";
    std::size_t t = 1;
    std::size_t n = 0;
    bool verify = false;
    std::string action = "tutte";
    std::uint64_t seed = 0;
    unsigned trials = 2;
    std::string op;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> side;
};

json read_input(const std::string& path, std::istream& in) {
    if (path != "-") return read_json_file(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("<stdin>: ") + e.what());
    }
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

Multigraph load_graph(const std::string& path, std::istream& in) {
    return graph_from_json(read_input(path, in), source_name(path));
}

std::string render_table(const json& j);

void emit(std::ostream& out, const json& j, bool table) {
    if (table)
        out << render_table(j);
    else
        out << j.dump() << '\n';
}

std::string render_polynomial(const json& terms) {
    BivariatePolynomial p = polynomial_from_json(json{{"terms", terms}});
    return p.to_string();
}

std::string render_table(const json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        if (key == "terms") {
            os << "T = " << render_polynomial(value) << '\n';
        } else if (key == "dims") {
            os << "degree  dim\n";
            for (std::size_t k = 0; k < value.size(); ++k) os << k << "  " << value[k].dump() << '\n';
        } else if (value.is_object()) {
            os << key << ":\n";
            std::istringstream nested(render_table(value));
            for (std::string line; std::getline(nested, line);) os << "  " << line << '\n';
        } else {
            os << key << ": " << value.dump() << '\n';
        }
    }
    return os.str();
}

EdgeOrder resolve_order(const Options& o, std::size_t e) {
    if (o.order.empty()) return natural_order(e);
    EdgeOrder sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != natural_order(e))
        throw std::invalid_argument("--order must be a permutation of 0.." + std::to_string(e == 0 ? 0 : e - 1));
    return o.order;
}

int cmd_tutte(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(o.input, in);
    const BivariatePolynomial t = tutte_deletion_contraction(g);
    json result = to_json(t);
    bool ok = true;
    if (o.verify) {
        const BivariatePolynomial act = tutte_activity(g, resolve_order(o, g.edge_count()));
        json v{{"activity_sum", act == t}};
        ok = act == t;
        if (g.edge_count() <= default_budget().enumeration_cap) {
            const bool cn = tutte_corank_nullity(graphic_rank(g), g.edge_count()) == t;
            v["corank_nullity"] = cn;
            ok = ok && cn;
        }
        v["agree"] = ok;
        result["verify"] = v;
    }
    emit(out, result, o.table);
    if (!ok) err << "psalg tutte: verification failed\n";
    return ok ? kOk : kFailure;
}

int cmd_hilbert(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(o.input, in);
    const std::size_t e = g.edge_count(), v = g.vertex_count(), c = component_count(g);
    HilbertSeries hs;
    json verify;
    if (o.kind == "forest") {
        hs = subalgebra_hilbert(TruncatedAlgebra::forest(g), graph_linear_forms(g));
        if (o.verify) {
            verify["c_side"] = to_json(hs)["dims"];
            verify["b_side"] = to_json(quotient_hilbert(v, graph_quotient_generators(g, 1)))["dims"];
            verify["tutte"] = to_json(forest_hilbert_from_tutte(tutte_deletion_contraction(g), e, v, c))["dims"];
        }
    } else if (o.kind == "tree") {
        if (c != 1) {
            err << "psalg hilbert: kind 'tree' requires a connected graph (input has " << c << " components)\n";
            return kFailure;
        }
        hs = subalgebra_hilbert(TruncatedAlgebra::tree(g), graph_linear_forms(g));
        if (o.verify) {
            verify["c_side"] = to_json(hs)["dims"];
            verify["b_side"] = to_json(quotient_hilbert(v, graph_tree_quotient_generators(g)))["dims"];
            verify["tutte"] = to_json(tree_hilbert_from_tutte(tutte_deletion_contraction(g), e, v, c))["dims"];
        }
    } else {
        hs = tlabel_hilbert(g, o.t);
        if (o.verify) {
            verify["clone"] = to_json(hs)["dims"];
            verify["c_side"] =
                to_json(subalgebra_hilbert(TruncatedAlgebra::forest(g, static_cast<unsigned>(o.t)), graph_linear_forms(g)))["dims"];
            verify["b_side"] = to_json(quotient_hilbert(v, graph_quotient_generators(g, o.t)))["dims"];
        }
    }
    json result = to_json(hs);
    bool ok = true;
    if (o.verify) {
        for (const auto& [key, dims] : verify.items()) ok = ok && dims == result["dims"];
        verify["agree"] = ok;
        result["verify"] = verify;
    }
    emit(out, result, o.table);
    if (!ok) err << "psalg hilbert: verification failed\n";
    return ok ? kOk : kFailure;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
    const HilbertSeries hs = hilbert_from_json(read_input(o.input, in), source_name(o.input));
    emit(out, to_json(reconstruct_tutte(hs, o.t, o.n)), o.table);
    return kOk;
}

json edge_sets(const std::vector<EdgeSet>& sets) {
    json arr = json::array();
    for (const EdgeSet& s : sets) arr.push_back(s);
    return arr;
}

json hyper_check(const Hypergraph& h, const Options& o, bool& ok) {
    const RankOracle oracle(h, o.trials, o.seed);
    const std::size_t e = h.edge_count();
    require_enumerable(e, default_budget(), "hyper check");
    bool cycles = true, pairs = true, maximal = true;
    const std::size_t top = maximal_forest_size(oracle);
    std::size_t forests = 0, maximal_forests = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
        EdgeSet s;
        for (std::size_t i = 0; i < e; ++i)
            if (m >> i & 1) s.push_back(i);
        const bool indep = oracle.is_independent(s);
        cycles = cycles && indep != contains_cycle(h, s);
        const auto assignment = try_pair_assignment(h, s);
        pairs = pairs && assignment.has_value() == indep;
        if (assignment) pairs = pairs && is_valid_pair_assignment(h, s, *assignment);
        if (!indep) continue;
        ++forests;
        bool is_max = true;
        for (std::size_t x = 0; x < e && is_max; ++x)
            if (!(m >> x & 1)) is_max = oracle.rank(m | std::uint64_t{1} << x) == s.size();
        if (is_max) {
            ++maximal_forests;
            maximal = maximal && s.size() == top;
        }
        maximal = maximal && greedy_extend(oracle, s).size() == top;
    }
    const BivariatePolynomial t = hypergraph_tutte(oracle);
    const bool counts = t.evaluate(2, 1) == static_cast<long>(forests) &&
                        t.evaluate(1, 1) == static_cast<long>(maximal_forests);
    const HilbertSeries expected = forest_hilbert_from_nullity(t, e - top);
    bool generic = true;
    for (std::uint64_t k = 0; k < 5; ++k)
        generic = generic && hypergraph_hilbert(h, random_parameters(h, o.seed + k)) == expected;
    ok = cycles && pairs && maximal && counts && generic;
    return {{"independence_matches_cycles", cycles},
            {"pair_assignment", pairs},
            {"maximal_forests_equal_size", maximal},
            {"tutte_counts", counts},
            {"generic_series_stable", generic},
            {"passed", ok}};
}

int cmd_hyper(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Hypergraph h = hypergraph_from_json(read_input(o.input, in), source_name(o.input));
    json result;
    bool ok = true;
    if (o.action == "tutte") {
        result = to_json(hypergraph_tutte(RankOracle(h, o.trials, o.seed)));
    } else if (o.action == "forests" || o.action == "trees") {
        const RankOracle oracle(h, o.trials, o.seed);
        const auto sets = o.action == "forests" ? enumerate_hyperforests(oracle) : enumerate_hypertrees(oracle);
        result = {{o.action, edge_sets(sets)}, {"count", sets.size()}};
    } else if (o.action == "hilbert") {
        result = to_json(hypergraph_hilbert(h, random_parameters(h, o.seed)));
    } else {
        result = hyper_check(h, o, ok);
    }
    emit(out, result, o.table);
    if (!ok) err << "psalg hyper: property check failed\n";
    return ok ? kOk : kFailure;
}

HilbertSeries forest_series(const Multigraph& g) {
    return subalgebra_hilbert(TruncatedAlgebra::forest(g), graph_linear_forms(g));
}

int cmd_whitney(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(o.input, in);
    Multigraph after;
    if (o.op == "identify" || o.op == "twist") {
        if (o.vertices.size() != 2) {
            err << "psalg whitney: --op " << o.op << " needs --vertices u v\n";
            return kUsage;
        }
        after = o.op == "identify" ? whitney_identify(g, o.vertices[0], o.vertices[1])
                                   : whitney_twist(g, o.vertices[0], o.vertices[1], o.side);
    } else {
        if (o.vertices.size() != 1) {
            err << "psalg whitney: --op cleave needs --vertices c\n";
            return kUsage;
        }
        after = whitney_cleave(g, o.vertices[0], o.side);
    }
    const HilbertSeries before_hs = forest_series(g), after_hs = forest_series(after);
    const bool cycles = same_cycle_space(g, after, natural_order(g.edge_count()));
    const bool series = before_hs == after_hs;
    json result{{"graph", to_json(after)},
                {"report",
                 {{"same_cycle_space", cycles},
                  {"forest_series_before", to_json(before_hs)["dims"]},
                  {"forest_series_after", to_json(after_hs)["dims"]},
                  {"forest_series_equal", series}}}};
    emit(out, result, o.table);
    if (!(cycles && series)) err << "psalg whitney: invariants not preserved\n";
    return cycles && series ? kOk : kFailure;
}

int cmd_conjecture(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Multigraph a = load_graph(o.input, in), b = load_graph(o.second_input, in);
    std::optional<std::vector<std::size_t>> bijection;
    if (!o.bijection_file.empty()) {
        const json j = read_input(o.bijection_file, in);
        const json& arr = j.is_object() && j.contains("bijection") ? j["bijection"] : j;
        if (!arr.is_array()) throw ParseError(o.bijection_file + ": field 'bijection': expected an array");
        bijection = arr.get<std::vector<std::size_t>>();
    }
    const BridgeFreeComparison r = compare_bridge_free(a, b, bijection);
    json report{{"bridge_free_edges", {r.bridge_free_a.edge_count(), r.bridge_free_b.edge_count()}},
                {"matroids", to_string(r.matroids)},
                {"tree_series_a", to_json(r.tree_series_a)["dims"]},
                {"tree_series_b", to_json(r.tree_series_b)["dims"]},
                {"tree_series_equal", r.tree_series_a == r.tree_series_b},
                {"verdict", to_string(r.verdict)},
                {"note", "equal series with different matroids is evidence only, never a proof"}};
    if (r.bijection) report["bijection"] = *r.bijection;
    emit(out, report, o.table);
    if (r.verdict == EvidenceVerdict::Inconsistent) {
        err << "psalg conjecture: isomorphic bridge-free matroids with different tree series\n";
        return kFailure;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph and hypergraph algebras, Hilbert series and Tutte polynomials", "psalg"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--table", o.table, "Human-readable output instead of JSON");
    app.add_option("--order", o.order, "Edge order for activity computations, smallest first");

    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a graph");
    tutte->add_option("graph", o.input, "Graph JSON file, or - for stdin")->required();
    tutte->add_flag("--verify", o.verify, "Cross-check against the activity and corank-nullity sums");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a graph algebra");
    hilbert->add_option("graph", o.input, "Graph JSON file, or - for stdin")->required();
    hilbert->add_option("--kind", o.kind, "forest, tree or tlabel")
        ->check(CLI::IsMember({"forest", "tree", "tlabel"}))
        ->capture_default_str();
    hilbert->add_option("--t", o.t, "Labels per edge for kind tlabel")->check(CLI::Range(1, 255))->capture_default_str();
    hilbert->add_flag("--verify", o.verify, "Compare both presentations and the Tutte specialization");

    auto* reconstruct = app.add_subcommand("reconstruct", "Tutte polynomial from a t-labelled Hilbert series");
    reconstruct->add_option("hilbert", o.input, "Hilbert JSON file, or - for stdin")->required();
    reconstruct->add_option("--t", o.t, "Labels per edge")->required()->check(CLI::PositiveNumber);
    reconstruct->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);

    auto* hyper = app.add_subcommand("hyper", "Hypergraph matroid computations");
    hyper->add_option("hypergraph", o.input, "Hypergraph JSON file, or - for stdin")->required();
    hyper->add_option("--action", o.action, "tutte, forests, trees, hilbert or check")
        ->check(CLI::IsMember({"tutte", "forests", "trees", "hilbert", "check"}))
        ->capture_default_str();
    hyper->add_option("--seed", o.seed, "Seed for random parameters")->capture_default_str();
    hyper->add_option("--trials", o.trials, "Random parameter sets per rank query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* whitney = app.add_subcommand("whitney", "Apply identify, cleave or twist and report invariants");
    whitney->add_option("graph", o.input, "Graph JSON file, or - for stdin")->required();
    whitney->add_option("--op", o.op, "identify, cleave or twist")
        ->required()
        ->check(CLI::IsMember({"identify", "cleave", "twist"}));
    whitney->add_option("--vertices", o.vertices, "identify/twist: u v; cleave: the cut vertex")->required();
    whitney->add_option("--side", o.side, "Edge indices of the cleaved or twisted piece");

    auto* conjecture = app.add_subcommand("conjecture", "Compare bridge-free matroids and tree series of two graphs");
    conjecture->add_option("graph_a", o.input, "First graph JSON file")->required();
    conjecture->add_option("graph_b", o.second_input, "Second graph JSON file")->required();
    conjecture->add_option("--bijection", o.bijection_file, "JSON array mapping bridge-free edges of A to B");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (whitney->parsed() && o.op != "identify" && o.side.empty()) {
        err << "psalg whitney: --op " << o.op << " needs --side\n";
        return kUsage;
    }

    try {
        if (tutte->parsed()) return cmd_tutte(o, in, out, err);
        if (hilbert->parsed()) return cmd_hilbert(o, in, out, err);
        if (reconstruct->parsed()) return cmd_reconstruct(o, in, out, err);
        if (hyper->parsed()) return cmd_hyper(o, in, out, err);
        if (whitney->parsed()) return cmd_whitney(o, in, out, err);
        return cmd_conjecture(o, in, out, err);
    } catch (const ParseError& e) {
        err << "psalg: parse error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "psalg: budget exceeded: " << e.what() << '\n';
    } catch (const InconsistentInput& e) {
        err << "psalg: inconsistent input: " << e.what() << '\n';
    } catch (const WhitneyError& e) {
        err << "psalg: invalid operation site: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "psalg: error: " << e.what() << '\n';
    }
    return kFailure;
}

}  // namespace psalg::cli
