#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhvd/graph.hpp"

namespace dhvd {

/// Plain-text graph file:
///   c <comment>        ignored, as are blank lines
///   p dhvd <n> <m>     header, exactly once, before any s/e line
///   s <v>              v belongs to S (optional)
///   e <u> <v>          edge, 0-based
struct EdgeListDocument {
    Graph graph;
    VertexSet s;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

EdgeListDocument parse_edge_list(std::istream& in);
EdgeListDocument parse_edge_list(std::string_view text);
/// Errors name the file.
EdgeListDocument read_edge_list(const std::filesystem::path& path);

/// Header, sorted s lines, then sorted edges; `comments` go right after the header.
std::string emit_edge_list(const Graph& g, const VertexSet& s, const std::vector<std::string>& comments = {});
std::string emit_edge_list(const Graph& g);
void write_edge_list(const std::filesystem::path& path, const std::string& text);

}  // namespace dhvd
