// dom: command-line front end for the movdom library.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 limit exceeded,
// 4 counterexamples found.

#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"
#include "movdom/harness.hpp"
#include "movdom/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

using namespace movdom;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kLimits = 3, kCounterexample = 4 };

enum class InputFormat { graph6, edgelist };

struct RunConfig {
    std::string format = "graph6";
    std::string graph6;
    std::string edgelist;
    std::string input;
    std::string kind = "gamma_mt2";
    bool allow_equal = false;
    bool certificate = false;
    bool json = false;

    std::string op;
    std::vector<std::string> operands;
    bool layout = false;

    std::string theorem;
    std::optional<unsigned> min_order;
    unsigned max_order = 4;
    unsigned pg = 3;
    unsigned ph = 3;
    std::string mode = "both";
    std::uint64_t seed = 1;
    std::uint64_t random = 0;
    double edge_prob = 0.5;
    unsigned jobs = 1;
    bool include_disconnected = false;
};

// Accepted names for `dom verify`; the descriptive names are accepted as well.
const std::map<std::string, Theorem, std::less<>> kTheoremAliases = {
    {"thm3.1", Theorem::movable_bound}, {"rmk3.2", Theorem::lower_bound},   {"thm3.3", Theorem::join},
    {"thm3.4", Theorem::join_k1},       {"lem3.6", Theorem::projection_in}, {"lem3.7", Theorem::projection_out},
    {"thm3.8", Theorem::corona},
};

std::string slurp(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path)
{
    if (path == "-")
        return slurp(std::cin);
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return slurp(in);
}

InputFormat input_format(const std::string& name)
{
    if (name == "graph6")
        return InputFormat::graph6;
    if (name == "edgelist")
        return InputFormat::edgelist;
    throw CLI::ValidationError("--format", "expected graph6 or edgelist");
}

Graph parse_text(const std::string& text, InputFormat format)
{
    std::vector<std::string> warnings;
    Graph g;
    if (format == InputFormat::graph6) {
        // First non-empty line only.
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
        }
        g = parse_graph6(line, &warnings);
    } else {
        g = parse_edgelist(text, &warnings);
    }
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';
    return g;
}

Graph read_invariant_input(const RunConfig& cfg)
{
    if (!cfg.graph6.empty())
        return parse_text(cfg.graph6, InputFormat::graph6);
    if (!cfg.edgelist.empty())
        return parse_text(read_file(cfg.edgelist), InputFormat::edgelist);
    const auto text = cfg.input.empty() ? slurp(std::cin) : read_file(cfg.input);
    return parse_text(text, input_format(cfg.format));
}

Graph read_operand(const std::string& operand, InputFormat format)
{
    if (format == InputFormat::graph6)
        return parse_text(operand, InputFormat::graph6);
    return parse_text(read_file(operand), InputFormat::edgelist);
}

int cmd_invariant(const RunConfig& cfg)
{
    auto kind = parse_kind(cfg.kind);
    if (!kind)
        throw CLI::ValidationError("--kind", "expected gamma, gamma_t, gamma_m2 or gamma_mt2");
    const auto g = read_invariant_input(cfg);
    const auto result = solve(g, *kind, SolveOptions{cfg.allow_equal});
    if (cfg.json) {
        std::cout << emit_certificate(result.certificate) << '\n';
        return kOk;
    }
    std::cout << to_string(*kind) << ' ' << (result.exists() ? std::to_string(*result.value) : "nonexistent") << '\n';
    if (cfg.certificate)
        std::cout << emit_certificate(result.certificate) << '\n';
    return kOk;
}

int cmd_build(const RunConfig& cfg)
{
    const auto format = input_format(cfg.format);
    const auto g = read_operand(cfg.operands.at(0), format);
    const auto h = read_operand(cfg.operands.at(1), format);
    if (cfg.op == "join") {
        std::cout << write_graph6(join(g, h)) << '\n';
        return kOk;
    }
    const auto product = corona(g, h);
    std::cout << write_graph6(product.graph) << '\n';
    if (cfg.layout) {
        const auto& layout = product.layout;
        std::cout << "# corona layout: |V(G)|=" << layout.g_order() << " |V(H)|=" << layout.h_order() << '\n';
        for (VertexId a = 0; a < layout.g_order(); ++a)
            std::cout << "# centre " << a << ": copy " << layout.copy_vertices(a).to_string() << '\n';
    }
    return kOk;
}

void print_human(const TheoremReport& r)
{
    std::cout << "theorem:    " << to_string(r.theorem) << '\n'
              << "family:     " << r.family << '\n'
              << "mode:       " << to_string(r.mode) << (r.allow_equal_replacements ? " (equal replacements allowed)" : "")
              << '\n'
              << "instances:  " << r.instances_total << " total, " << r.instances_checked << " checked, "
              << r.instances_skipped << " skipped, " << r.instances_vacuous << " vacuous\n";
    if (r.sub_checks != 0)
        std::cout << "sub-checks: " << r.sub_checks << '\n';
    if (r.proof_witness_checked != 0)
        std::cout << "exhibited witness: " << r.proof_witness_checked - r.proof_witness_failures << '/'
                  << r.proof_witness_checked << " 2-movable\n";
    if (r.proof_claim_checked != 0)
        std::cout << "gamma_t-sets all 2-movable in G: " << r.proof_claim_checked - r.proof_claim_failures << '/'
                  << r.proof_claim_checked << " instances\n";
    for (const auto& d : r.discrepancies) {
        std::cout << "discrepancy: G=" << d.operands.at(0) << " H=" << d.operands.at(1) << " gamma_t(H)=" << d.gamma_t_h
                  << " statement=" << (d.statement_holds ? "holds" : "fails") << " proof=" << (d.proof_holds ? "holds" : "fails")
                  << " expected=" << (d.expected ? std::to_string(*d.expected) : "nonexistent")
                  << " got=" << (d.got ? std::to_string(*d.got) : "nonexistent") << (d.equality_holds ? " (equal)" : " (differs)")
                  << '\n';
    }
    for (const auto& c : r.counterexamples) {
        std::cout << "COUNTEREXAMPLE:";
        for (const auto& o : c.operands)
            std::cout << ' ' << o;
        std::cout << "  expected " << (c.expected ? std::to_string(*c.expected) : "nonexistent") << ", got "
                  << (c.got ? std::to_string(*c.got) : "nonexistent");
        if (!c.note.empty())
            std::cout << "  (" << c.note << ')';
        std::cout << '\n';
    }
    std::cout << "counterexamples: " << r.counterexamples.size() << '\n'
              << "elapsed:    " << std::chrono::duration<double>(r.elapsed).count() << " s\n";
}

int cmd_verify(const RunConfig& cfg)
{
    std::optional<Theorem> theorem;
    if (auto it = kTheoremAliases.find(cfg.theorem); it != kTheoremAliases.end())
        theorem = it->second;
    else
        theorem = parse_theorem(cfg.theorem);
    if (!theorem)
        throw CLI::ValidationError("theorem", "unknown theorem id '" + cfg.theorem + "'");
    auto mode = parse_mode(cfg.mode);
    if (!mode)
        throw CLI::ValidationError("--mode", "expected statement, proof or both");

    FamilySpec family;
    family.max_order = cfg.max_order;
    if (cfg.min_order)
        family.min_order = *cfg.min_order;
    else
        family.min_order = *theorem == Theorem::join ? 2 : *theorem == Theorem::join_k1 ? 3 : 1;
    family.min_order = std::min<VertexId>(family.min_order, family.max_order);
    family.g_order = cfg.pg;
    family.h_order = cfg.ph;
    family.connected_only = !cfg.include_disconnected;
    if (cfg.random != 0)
        family.random = RandomFamily{cfg.random, cfg.edge_prob, cfg.seed};

    SweepOptions options;
    options.check.allow_equal_replacements = cfg.allow_equal;
    options.check.mode = *mode;
    options.jobs = std::max(1U, cfg.jobs);

    const auto report = sweep(*theorem, family, options);
    if (cfg.json)
        std::cout << emit_report(report) << '\n';
    else
        print_human(report);
    return report.ok() ? kOk : kCounterexample;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Exact domination invariants, graph products and claim sweeps", "dom"};
    app.require_subcommand(1);

    auto* invariant = app.add_subcommand("invariant", "Compute gamma, gamma_t, gamma_m2 or gamma_mt2 of one graph");
    invariant->add_option("--kind", cfg.kind, "gamma | gamma_t | gamma_m2 | gamma_mt2")->capture_default_str();
    auto* g6 = invariant->add_option("--graph6", cfg.graph6, "Graph as a graph6 string");
    auto* el = invariant->add_option("--edgelist", cfg.edgelist, "Path to an edge-list file");
    auto* in = invariant->add_option("--input", cfg.input, "Path to a file in --format ('-' for stdin)");
    g6->excludes(el)->excludes(in);
    el->excludes(in);
    invariant->add_option("--format", cfg.format, "graph6 | edgelist")->capture_default_str();
    invariant->add_flag("--certificate", cfg.certificate, "Print the witness certificate");
    invariant->add_flag("--allow-equal-replacements", cfg.allow_equal, "Accept u = v in pair replacements");
    invariant->add_flag("--json", cfg.json, "Structured output");

    auto* build = app.add_subcommand("build", "Build a join or corona product and print its graph6");
    build->add_option("op", cfg.op, "join | corona")->required()->check(CLI::IsMember({"join", "corona"}));
    build->add_option("operands", cfg.operands, "Two graphs (graph6 strings, or edge-list paths with --format edgelist)")
        ->required()
        ->expected(2);
    build->add_option("--format", cfg.format, "graph6 | edgelist")->capture_default_str();
    build->add_flag("--layout", cfg.layout, "Print the corona vertex layout as comment lines");

    auto* verify = app.add_subcommand("verify", "Sweep a claim over an instance family");
    verify->add_option("theorem", cfg.theorem, "movable-bound | lower-bound | join | join-k1 | projection-in | projection-out | corona | oracle")
        ->required();
    verify->add_option("--min-order", cfg.min_order, "Smallest operand order");
    verify->add_option("--max-order", cfg.max_order, "Largest operand order")->capture_default_str();
    verify->add_option("--pg", cfg.pg, "Order of G for corona claims")->capture_default_str();
    verify->add_option("--ph", cfg.ph, "Order of H for corona claims")->capture_default_str();
    verify->add_option("--mode", cfg.mode, "statement | proof | both")->capture_default_str();
    verify->add_option("--random", cfg.random, "Draw this many random operands instead of enumerating");
    verify->add_option("--edge-prob", cfg.edge_prob, "Edge probability for --random")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for --random")->capture_default_str();
    verify->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    verify->add_flag("--include-disconnected", cfg.include_disconnected, "Do not filter operands by connectivity");
    verify->add_flag("--allow-equal-replacements", cfg.allow_equal, "Accept u = v in pair replacements");
    verify->add_flag("--json", cfg.json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*invariant)
            return cmd_invariant(cfg);
        if (*build)
            return cmd_build(cfg);
        return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const GraphError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return kLimits;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}
