// bookembed: two-page book embeddings, exact book thickness, and graph
// generators from the command line.
//
// Exit codes: 0 success, 1 infeasible or not applicable, 2 input error,
// 3 internal guarantee violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookembed/augment.hpp"
#include "bookembed/connectivity.hpp"
#include "bookembed/error.hpp"
#include "bookembed/generators.hpp"
#include "bookembed/io.hpp"
#include "bookembed/layout.hpp"
#include "bookembed/pipeline.hpp"
#include "bookembed/planar.hpp"
#include "bookembed/random_graphs.hpp"

namespace {

using namespace bookembed;
using nlohmann::json;

enum Exit { kOk = 0, kInfeasible = 1, kInputError = 2, kInternal = 3 };

struct Globals {
    std::string input = "-";
    std::string output = "-";
    std::string format;
    std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path)
{
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string &path, const std::string &text)
{
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output '" + path + "'");
    out << text;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::LoopEdge:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::CoverageError:
        return kInputError;
    case ErrorKind::InternalGuaranteeViolated:
    case ErrorKind::InconsistentRotation:
    case ErrorKind::NotPlaneEmbedding:
    case ErrorKind::TraceMismatch:
        return kInternal;
    default:
        return kInfeasible;
    }
}

std::string format_or(const Globals &g, const std::string &fallback)
{
    return g.format.empty() ? fallback : g.format;
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed)
{
    for (const char *a : allowed)
        if (format == a)
            return;
    throw UsageError("format '" + format + "' is not supported by this command");
}

json graph_json(const Graph &g)
{
    json edges = json::array();
    for (const Edge &e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

json trace_json(const AugmentationTrace &trace)
{
    json added = json::array();
    for (const auto &a : trace.added_vertices)
        added.push_back({{"id", a.id},
                         {"kind", a.kind == AddedKind::Stellation ? "stellation" : "bridge"},
                         {"attachments", a.attachments}});
    json edges = json::array();
    for (const Edge &e : trace.added_edges)
        edges.push_back({e.u, e.v});
    return {{"original_n", trace.original_vertex_count}, {"added_vertices", added}, {"added_edges", edges}};
}

int run_embed(const Globals &globals, bool homeomorphic, std::uint64_t budget)
{
    const std::string format = format_or(globals, "json");
    require_format(format, {"json", "svg"});
    const Graph g = parse_edge_list(read_input(globals.input));
    EmbedOptions options;
    options.hamiltonian.node_budget = budget;

    LayoutReport report;
    PipelineStats stats;
    if (homeomorphic) {
        HomeomorphicLayout h = homeomorphic_two_page(g, options);
        report.graph = h.subdivided;
        report.layout = h.layout;
        report.spine_crossings = h.spine_crossings;
        report.provenance.mode = "homeomorphic";
        report.provenance.original_n = g.vertex_count();
        report.provenance.subdivision = h.subdivision;
        stats = h.stats;
    } else {
        EmbedResult r = two_page_embed(g, options);
        report.graph = g;
        report.layout = r.layout;
        stats = r.stats;
    }
    report.provenance.blocks = stats.blocks;
    report.provenance.bridge_vertices = stats.bridge_vertices;
    report.provenance.stellation_vertices = stats.stellation_vertices;
    report.provenance.hamiltonian_nodes = stats.hamiltonian_nodes;

    write_output(globals.output,
                 format == "svg" ? emit_svg(report.graph, report.layout) : emit_layout_json(report));
    return kOk;
}

int run_verify(const Globals &globals)
{
    require_format(format_or(globals, "json"), {"json"});
    const LayoutReport report = parse_layout_json(read_input(globals.input));
    const auto violations = verify_layout(report.graph, report.layout);
    json v = json::array();
    for (const auto &x : violations)
        v.push_back({{"first", {x.first.u, x.first.v}}, {"second", {x.second.u, x.second.v}}, {"page", x.page}});
    bool count_ok = report.layout.page_count == count_pages(report.layout.pages);
    json doc = {{"valid", violations.empty() && count_ok},
                {"violations", v},
                {"page_count", report.layout.page_count},
                {"page_count_consistent", count_ok}};
    write_output(globals.output, doc.dump(2) + "\n");
    return violations.empty() && count_ok ? kOk : kInfeasible;
}

int run_oracle(const Globals &globals, int max_n)
{
    require_format(format_or(globals, "json"), {"json"});
    const Graph g = parse_edge_list(read_input(globals.input));
    OracleOptions options;
    options.max_vertices = max_n;
    const int bt = pagenumber_oracle(g, options);
    json doc = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"pagenumber", bt}};
    write_output(globals.output, doc.dump(2) + "\n");
    return kOk;
}

int run_augment(const Globals &globals)
{
    require_format(format_or(globals, "json"), {"json"});
    const Graph g = parse_edge_list(read_input(globals.input));
    auto rs = planar_embed(g);
    if (!rs)
        throw Error(ErrorKind::NotPlanar, "graph is not planar");
    const Augmented bridged = augment_to_three_connected(g, *rs);
    const Augmented stellated = stellate(bridged.graph, bridged.rotation);
    json doc;
    doc["input"] = graph_json(g);
    doc["three_connected"] = graph_json(bridged.graph);
    doc["three_connected"]["rotation"] = bridged.rotation.rotation;
    doc["three_connected"]["separating_pair_history"] = bridged.separating_pair_history;
    doc["triangulation"] = graph_json(stellated.graph);
    doc["triangulation"]["rotation"] = stellated.rotation.rotation;
    doc["trace"] = trace_json(compose(bridged.trace, stellated.trace));
    write_output(globals.output, doc.dump(2) + "\n");
    return kOk;
}

int run_render(const Globals &globals)
{
    require_format(format_or(globals, "svg"), {"svg"});
    const LayoutReport report = parse_layout_json(read_input(globals.input));
    write_output(globals.output, emit_svg(report.graph, report.layout));
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Two-page book embeddings of planar graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--input,-i", globals.input, "Input file, - for stdin");
    app.add_option("--output,-o", globals.output, "Output file, - for stdout");
    app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "svg", "edgelist"}));
    app.add_option("--seed", globals.seed, "Seed for the random test generator");

    bool homeomorphic = false;
    std::uint64_t budget = HamiltonianOptions{}.node_budget;
    auto *embed = app.add_subcommand("embed", "Two-page layout of a nicely planar graph");
    embed->add_flag("--homeomorphic", homeomorphic, "Subdivide every edge once, then lay out (any planar graph)");
    embed->add_option("--budget", budget, "Hamiltonian search node budget");

    auto *verify = app.add_subcommand("verify", "Check a layout JSON for same-page crossings");

    int max_n = 9;
    auto *oracle = app.add_subcommand("oracle", "Exact book thickness by exhaustive search");
    oracle->add_option("--max-n", max_n, "Largest vertex count accepted");

    auto *generate = app.add_subcommand("generate", "Emit a generated graph as an edge list");
    generate->require_subcommand(1);
    int depth = 3, rows = 3, cols = 3, per_edge = 1, vertices = 10;
    auto *gen_x = generate->add_subcommand("xtree", "X-tree");
    gen_x->add_option("--depth", depth)->check(CLI::Range(0, 20));
    auto *gen_ext = generate->add_subcommand("ext-xtree", "Extended X-tree");
    gen_ext->add_option("--depth", depth)->check(CLI::Range(0, 20));
    auto *gen_grid = generate->add_subcommand("grid", "Rectangular grid");
    gen_grid->add_option("--rows", rows)->check(CLI::PositiveNumber);
    gen_grid->add_option("--cols", cols)->check(CLI::PositiveNumber);
    auto *gen_sub = generate->add_subcommand("subdivide", "Subdivide the input graph's edges");
    gen_sub->add_option("--per-edge", per_edge)->check(CLI::NonNegativeNumber);
    auto *gen_stacked = generate->add_subcommand("stacked", "Random stacked triangulation (uses --seed)");
    gen_stacked->add_option("--vertices", vertices)->check(CLI::Range(3, 100000));

    auto *augment = app.add_subcommand("augment", "Make a block 3-connected and stellate it; print the trace");
    auto *render = app.add_subcommand("render", "Draw a layout JSON as SVG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (embed->parsed())
            return run_embed(globals, homeomorphic, budget);
        if (verify->parsed())
            return run_verify(globals);
        if (oracle->parsed())
            return run_oracle(globals, max_n);
        if (augment->parsed())
            return run_augment(globals);
        if (render->parsed())
            return run_render(globals);
        if (generate->parsed()) {
            require_format(format_or(globals, "edgelist"), {"edgelist"});
            Graph g;
            if (gen_x->parsed()) {
                g = x_tree(depth);
            } else if (gen_ext->parsed()) {
                g = extended_x_tree(depth);
            } else if (gen_grid->parsed()) {
                g = grid(rows, cols);
            } else if (gen_sub->parsed()) {
                g = subdivide(parse_edge_list(read_input(globals.input)), per_edge).graph;
            } else {
                random_graphs::Rng rng(globals.seed);
                g = random_graphs::stacked_triangulation(vertices, rng);
            }
            write_output(globals.output, emit_edge_list(g));
            return kOk;
        }
    } catch (const Error &err) {
        std::cerr << "bookembed: " << err.what() << '\n';
        return exit_code(err.kind());
    } catch (const UsageError &err) {
        std::cerr << "bookembed: " << err.what() << '\n';
        return kInputError;
    } catch (const std::exception &err) {
        std::cerr << "bookembed: internal error: " << err.what() << '\n';
        return kInternal;
    }
    return kInputError;
}
