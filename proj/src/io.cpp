#include "bookembed/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "bookembed/error.hpp"

namespace bookembed {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string &what)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

long long parse_int(std::string_view token, std::size_t line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        parse_fail(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string edge_key(const Edge &e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Edge parse_edge_key(const std::string &key)
{
    auto dash = key.find('-');
    if (dash == std::string::npos)
        throw Error(ErrorKind::ParseError, "page key '" + key + "' is not of the form u-v");
    auto a = parse_int(std::string_view(key).substr(0, dash), 0);
    auto b = parse_int(std::string_view(key).substr(dash + 1), 0);
    return Edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<long long> header_n, header_m;
    std::vector<std::pair<long long, long long>> pairs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = tokens(line);
        if (tok.empty())
            continue;
        if (tok[0] == "p") {
            if (header_n || !pairs.empty())
                parse_fail(line_no, "header must come first and only once");
            if (tok.size() != 3)
                parse_fail(line_no, "header must be 'p <n> <m>'");
            header_n = parse_int(tok[1], line_no);
            header_m = parse_int(tok[2], line_no);
            if (*header_n < 0 || *header_m < 0)
                parse_fail(line_no, "header counts must be non-negative");
            continue;
        }
        if (tok.size() != 2)
            parse_fail(line_no, "expected 'u v'");
        long long a = parse_int(tok[0], line_no);
        long long b = parse_int(tok[1], line_no);
        if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000)
            throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex id out of range");
        pairs.emplace_back(a, b);
        if (end == text.size())
            break;
    }
    if (header_m && static_cast<std::size_t>(*header_m) != pairs.size())
        throw Error(ErrorKind::ParseError, "header announces " + std::to_string(*header_m) + " edges, found " +
                                               std::to_string(pairs.size()));
    long long n = 0;
    if (header_n) {
        n = *header_n;
    } else {
        for (auto [a, b] : pairs)
            n = std::max({n, a + 1, b + 1});
    }
    std::vector<std::pair<int, int>> edge_list;
    for (auto [a, b] : pairs)
        edge_list.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return build_graph(static_cast<int>(n), edge_list);
}

std::string emit_edge_list(const Graph &g)
{
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string emit_layout_json(const LayoutReport &report)
{
    json doc;
    doc["n"] = report.graph.vertex_count();
    json edges = json::array();
    for (const Edge &e : report.graph.edges())
        edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    doc["spine"] = report.layout.spine.order();
    json pages = json::object();
    for (const auto &[e, p] : report.layout.pages)
        pages[edge_key(e)] = p;
    doc["pages"] = pages;
    doc["page_count"] = report.layout.page_count;

    const Provenance &prov = report.provenance;
    json p;
    p["mode"] = prov.mode;
    p["blocks"] = prov.blocks;
    p["bridge_vertices"] = prov.bridge_vertices;
    p["stellation_vertices"] = prov.stellation_vertices;
    p["hamiltonian_nodes"] = prov.hamiltonian_nodes;
    if (prov.original_n)
        p["original_n"] = *prov.original_n;
    if (prov.subdivision) {
        json sub = json::object();
        for (const auto &[e, path] : *prov.subdivision)
            sub[edge_key(e)] = path;
        p["subdivision"] = sub;
    }
    doc["provenance"] = p;
    if (report.spine_crossings)
        doc["spine_crossings"] = *report.spine_crossings;
    return doc.dump(2) + "\n";
}

LayoutReport parse_layout_json(std::string_view text)
{
    try {
        const json doc = json::parse(text);
        LayoutReport report;
        const int n = doc.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto &e : doc.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        report.graph = Graph(n, edges);
        report.layout.spine = CyclicOrder(doc.at("spine").get<std::vector<Vertex>>());
        const json &pages = doc.at("pages");
        for (auto it = pages.begin(); it != pages.end(); ++it)
            report.layout.pages[parse_edge_key(it.key())] = it.value().get<int>();
        report.layout.page_count = doc.at("page_count").get<int>();

        const json &p = doc.at("provenance");
        Provenance &prov = report.provenance;
        prov.mode = p.at("mode").get<std::string>();
        prov.blocks = p.at("blocks").get<int>();
        prov.bridge_vertices = p.at("bridge_vertices").get<int>();
        prov.stellation_vertices = p.at("stellation_vertices").get<int>();
        prov.hamiltonian_nodes = p.at("hamiltonian_nodes").get<std::uint64_t>();
        if (p.contains("original_n"))
            prov.original_n = p.at("original_n").get<int>();
        if (p.contains("subdivision")) {
            SubdivisionMap sub;
            const json &paths = p.at("subdivision");
            for (auto it = paths.begin(); it != paths.end(); ++it)
                sub[parse_edge_key(it.key())] = it.value().get<std::vector<Vertex>>();
            prov.subdivision = std::move(sub);
        }
        if (doc.contains("spine_crossings"))
            report.spine_crossings = doc.at("spine_crossings").get<int>();
        return report;
    } catch (const json::exception &err) {
        throw Error(ErrorKind::ParseError, std::string("layout JSON: ") + err.what());
    }
}

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 40;

const char *page_color(int page)
{
    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
    return palette[(page - 1) % 7];
}

// Half-height of the arc for a chord spanning `span` spine steps.
int arc_height(int span, int page)
{
    int r = kUnit * span / 2;
    return page <= 2 ? r : r * page / 2;
}

} // namespace

std::string emit_svg(const Graph &g, const BookLayout &layout)
{
    try {
        if (!verify_layout(g, layout).empty())
            throw Error(ErrorKind::InvalidLayout, "layout has crossing chords on one page");
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::InvalidLayout)
            throw;
        throw Error(ErrorKind::InvalidLayout, err.what());
    }

    const auto &spine = layout.spine.order();
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < spine.size(); ++i)
        pos[spine[i]] = static_cast<int>(i);

    int above = 0, below = 0;
    for (const auto &[e, p] : layout.pages) {
        int h = arc_height(std::abs(pos[e.u] - pos[e.v]), p);
        (p == 2 ? below : above) = std::max(p == 2 ? below : above, h);
    }
    const int n = static_cast<int>(spine.size());
    const int width = 2 * kMargin + kUnit * std::max(n - 1, 0);
    const int y = kMargin + above;
    const int height = y + below + kMargin;
    auto x_of = [&](Vertex v) { return kMargin + kUnit * pos[v]; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <line class=\"spine\" x1=\"" << kMargin / 2 << "\" y1=\"" << y << "\" x2=\"" << width - kMargin / 2
        << "\" y2=\"" << y << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (const auto &[e, p] : layout.pages) {
        Vertex left = pos[e.u] < pos[e.v] ? e.u : e.v;
        Vertex right = e.other(left);
        int span = pos[right] - pos[left];
        int rx = kUnit * span / 2;
        int ry = arc_height(span, p);
        int sweep = p == 2 ? 0 : 1;
        out << "  <path class=\"edge page-" << p << "\" d=\"M " << x_of(left) << ' ' << y << " A " << rx << ' ' << ry
            << " 0 0 " << sweep << ' ' << x_of(right) << ' ' << y << "\" fill=\"none\" stroke=\"" << page_color(p)
            << "\" stroke-width=\"1.5\"/>\n";
    }
    for (Vertex v : spine) {
        out << "  <circle class=\"vertex\" cx=\"" << x_of(v) << "\" cy=\"" << y << "\" r=\"5\" fill=\"#000000\"/>\n";
        out << "  <text x=\"" << x_of(v) << "\" y=\"" << y + 18 << "\" font-size=\"12\" text-anchor=\"middle\">" << v
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bookembed
