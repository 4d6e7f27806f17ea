#include "steiner/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

std::int64_t parse_nonnegative_int(const std::string& tok, int line, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw ParseError(line, std::string(what) + " '" + tok + "' is not a nonnegative integer");
    errno = 0;
    char* end = nullptr;
    const std::int64_t value = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size())
        throw ParseError(line, std::string(what) + " '" + tok + "' out of range");
    return value;
}

double parse_weight(const std::string& tok, int line) {
    char* end = nullptr;
    errno = 0;
    const double w = std::strtod(tok.c_str(), &end);
    if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty())
        throw ParseError(line, "weight '" + tok + "' is not a valid decimal");
    if (w < 0.0) throw ParseError(line, "negative weight " + tok);
    return w;
}

struct RawEdge {
    std::int64_t u, v;
    double weight;
    int line;
};

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::int64_t n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto toks = tokenize(line);
        if (toks.size() != 2) throw ParseError(line_no, "expected header 'n m'");
        n = parse_nonnegative_int(toks[0], line_no, "vertex count");
        m = parse_nonnegative_int(toks[1], line_no, "edge count");
        if (n == 0) throw ParseError(line_no, "graph must have at least one vertex");
        if (n > std::numeric_limits<VertexId>::max() || m > n * (n - 1) / 2)
            throw ParseError(line_no, "header out of range");
        break;
    }
    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n m'");

    std::vector<RawEdge> raw;
    raw.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::int64_t> seen_labels;
    bool all_below_n = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        if (static_cast<std::int64_t>(raw.size()) == m)
            throw ParseError(line_no, "unexpected line after " + std::to_string(m) + " edges");
        const auto toks = tokenize(line);
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError(line_no, "expected 'u v' or 'u v w'");
        const std::int64_t u = parse_nonnegative_int(toks[0], line_no, "vertex label");
        const std::int64_t v = parse_nonnegative_int(toks[1], line_no, "vertex label");
        const double w = toks.size() == 3 ? parse_weight(toks[2], line_no) : 1.0;
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        raw.push_back({u, v, w, line_no});
        seen_labels.insert(u);
        seen_labels.insert(v);
        if (u >= n || v >= n) all_below_n = false;
        if (static_cast<std::int64_t>(seen_labels.size()) > n)
            throw ParseError(line_no, "more than " + std::to_string(n) + " distinct vertex labels");
    }
    if (static_cast<std::int64_t>(raw.size()) != m)
        throw ParseError(line_no == 0 ? 1 : line_no,
                         "expected " + std::to_string(m) + " edges, found " +
                             std::to_string(raw.size()));

    // Labels 0..n-1 map to themselves and may leave isolated vertices.
    // Anything else must name all n vertices so the dense mapping is total.
    ParsedGraph out;
    std::unordered_map<std::int64_t, VertexId> to_id;
    if (all_below_n) {
        out.labels.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            out.labels[static_cast<std::size_t>(i)] = i;
            to_id.emplace(i, static_cast<VertexId>(i));
        }
    } else {
        if (static_cast<std::int64_t>(seen_labels.size()) != n)
            throw ParseError(raw.empty() ? 1 : raw.back().line,
                             "labels exceed range [0, " + std::to_string(n) + ") but only " +
                                 std::to_string(seen_labels.size()) +
                                 " distinct labels are present");
        out.labels.assign(seen_labels.begin(), seen_labels.end());
        std::sort(out.labels.begin(), out.labels.end());
        for (std::size_t i = 0; i < out.labels.size(); ++i)
            to_id.emplace(out.labels[i], static_cast<VertexId>(i));
    }

    std::vector<EdgeRef> edges;
    edges.reserve(raw.size());
    std::unordered_set<std::int64_t> seen_pairs;
    for (const RawEdge& e : raw) {
        const VertexId u = to_id.at(e.u);
        const VertexId v = to_id.at(e.v);
        const std::int64_t key =
            static_cast<std::int64_t>(std::min(u, v)) * n + std::max(u, v);
        if (!seen_pairs.insert(key).second)
            throw ParseError(e.line, "duplicate edge " + std::to_string(e.u) + " " +
                                         std::to_string(e.v));
        edges.push_back({u, v, e.weight});
    }
    out.graph = Graph(static_cast<VertexId>(n), std::move(edges));
    return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::optional<VertexId> ParsedGraph::id_of_label(std::int64_t label) const {
    if (labels.empty()) {
        if (label < 0 || label >= graph.vertex_count()) return std::nullopt;
        return static_cast<VertexId>(label);
    }
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels.begin());
}

std::string format_weight(double w) {
    if (w == static_cast<double>(static_cast<std::int64_t>(w)) && std::abs(w) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(w));
        return buf;
    }
    for (int precision = 1; precision <= 17; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", precision, w);
        if (std::strtod(buf, nullptr) == w) return buf;
    }
    return "0";  // unreachable
}

std::string serialize(const ParsedGraph& pg) {
    std::vector<EdgeRef> edges = pg.graph.edges();
    std::sort(edges.begin(), edges.end(), [](const EdgeRef& a, const EdgeRef& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::ostringstream os;
    os << pg.graph.vertex_count() << ' ' << pg.graph.edge_count() << '\n';
    for (const EdgeRef& e : edges) {
        os << pg.label_of(e.u) << ' ' << pg.label_of(e.v);
        if (e.weight != 1.0) os << ' ' << format_weight(e.weight);
        os << '\n';
    }
    return os.str();
}

}  // namespace steiner
