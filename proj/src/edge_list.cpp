#include "dhvd/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dhvd {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

EdgeListDocument parse_edge_list(std::istream& in) {
    std::string raw;
    int line = 0;
    int header_line = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> s_members;
    std::vector<char> in_s;
    std::vector<std::vector<Vertex>> seen;
    auto vertex = [&](std::string_view tok) {
        const long long v = to_int(tok, line);
        if (v < 0 || v >= n) throw ParseError(line, "vertex " + std::string(tok) + " out of range");
        return static_cast<Vertex>(v);
    };
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (header_line) throw ParseError(line, "duplicate header");
            if (tok.size() != 4 || tok[1] != "dhvd") throw ParseError(line, "header must read 'p dhvd <n> <m>'");
            n = to_int(tok[2], line);
            m = to_int(tok[3], line);
            if (n < 0 || m < 0) throw ParseError(line, "negative header count");
            header_line = line;
            in_s.assign(n, 0);
            seen.assign(n, {});
        } else if (tok[0] == "s") {
            if (!header_line) throw ParseError(line, "'s' line before header");
            if (tok.size() != 2) throw ParseError(line, "'s' line takes one vertex");
            const Vertex v = vertex(tok[1]);
            if (in_s[v]) throw ParseError(line, "vertex listed in S twice");
            in_s[v] = 1;
            s_members.push_back(v);
        } else if (tok[0] == "e") {
            if (!header_line) throw ParseError(line, "'e' line before header");
            if (tok.size() != 3) throw ParseError(line, "'e' line takes two vertices");
            Vertex u = vertex(tok[1]);
            Vertex v = vertex(tok[2]);
            if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            for (Vertex w : seen[u])
                if (w == v) throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            seen[u].push_back(v);
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!header_line) throw ParseError(line, "missing 'p dhvd' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, body has " +
                                          std::to_string(edges.size()));
    EdgeListDocument doc{Graph(static_cast<int>(n), edges), VertexSet(static_cast<int>(n))};
    for (Vertex v : s_members) doc.s.insert(v);
    return doc;
}

EdgeListDocument parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

EdgeListDocument read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open file");
    try {
        return parse_edge_list(in);
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string emit_edge_list(const Graph& g, const VertexSet& s, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "p dhvd " << g.order() << ' ' << g.size() << '\n';
    for (const auto& c : comments) out << "c " << c << '\n';
    for (Vertex v = s.first(); v >= 0; v = s.next(v + 1)) out << "s " << v << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_edge_list(const Graph& g) { return emit_edge_list(g, g.none()); }

void write_edge_list(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot write file");
    out << text;
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace dhvd
