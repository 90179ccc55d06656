#include "udisk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace udisk {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::edge_count() const {
    size_t twice = 0;
    for (const auto& list : adj) twice += list.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    long long declared = -1;
    long long max_id = -1;
    bool saw_content = false;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;

        auto toks = tokens(line);
        if (!saw_content && toks.size() == 2 && toks[0] == "n") {
            long long count;
            if (!parse_int(toks[1], count) || count < 0) throw ParseError(lineno, "malformed header");
            declared = count;
            saw_content = true;
            continue;
        }
        saw_content = true;

        long long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError(lineno, "malformed line: expected \"u v\"");
        if (u < 0 || v < 0) throw ParseError(lineno, "id out of range");
        if (declared >= 0 && (u >= declared || v >= declared)) throw ParseError(lineno, "id out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second)
            throw ParseError(lineno, "duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
    }

    int n = declared >= 0 ? static_cast<int>(declared) : static_cast<int>(max_id + 1);
    return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace udisk
