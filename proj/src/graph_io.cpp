#include "pstr/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pstr {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty lines whose first token does not start a comment.
std::vector<Line> content_lines(std::string_view text, std::string_view comment) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && !tokens.front().starts_with(comment)) {
      lines.push_back({number, std::move(tokens)});
    }
    pos = end + 1;
  }
  return lines;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw GraphError("line " + std::to_string(line) + ": expected integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

Vertex checked_vertex(long long id, int n, int line) {
  if (id < 0 || id >= n) {
    throw GraphError("line " + std::to_string(line) + ": vertex id out of range");
  }
  return static_cast<Vertex>(id);
}

Graph build(int n, const std::vector<Edge>& edges, const std::vector<int>& line_of) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) {
      throw GraphError("line " + std::to_string(line_of[i]) + ": self-loop at vertex " +
                       std::to_string(edges[i].first));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edgelist(std::string_view text) {
  auto lines = content_lines(text, "#");
  if (lines.empty() || lines[0].tokens.size() != 2) {
    throw GraphError("malformed header: expected 'n m'");
  }
  const long long n = to_int(lines[0].tokens[0], lines[0].number);
  const long long m = to_int(lines[0].tokens[1], lines[0].number);
  if (n < 0 || m < 0) throw GraphError("malformed header: negative count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw GraphError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::vector<int> line_of;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) {
      throw GraphError("line " + std::to_string(l.number) + ": expected 'u v'");
    }
    edges.emplace_back(checked_vertex(to_int(l.tokens[0], l.number), static_cast<int>(n), l.number),
                       checked_vertex(to_int(l.tokens[1], l.number), static_cast<int>(n), l.number));
    line_of.push_back(l.number);
  }
  return build(static_cast<int>(n), edges, line_of);
}

Graph parse_dimacs(std::string_view text) {
  auto lines = content_lines(text, "c");
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<int> line_of;
  for (const auto& l : lines) {
    if (l.tokens[0] == "p") {
      if (n >= 0) throw GraphError("line " + std::to_string(l.number) + ": duplicate header");
      if (l.tokens.size() != 4) throw GraphError("malformed header: expected 'p edge N M'");
      n = to_int(l.tokens[2], l.number);
      m = to_int(l.tokens[3], l.number);
      if (n < 0 || m < 0) throw GraphError("malformed header: negative count");
    } else if (l.tokens[0] == "e") {
      if (n < 0) throw GraphError("line " + std::to_string(l.number) + ": edge before header");
      if (l.tokens.size() != 3) {
        throw GraphError("line " + std::to_string(l.number) + ": expected 'e u v'");
      }
      edges.emplace_back(
          checked_vertex(to_int(l.tokens[1], l.number) - 1, static_cast<int>(n), l.number),
          checked_vertex(to_int(l.tokens[2], l.number) - 1, static_cast<int>(n), l.number));
      line_of.push_back(l.number);
    } else {
      throw GraphError("line " + std::to_string(l.number) + ": unknown record '" +
                       std::string(l.tokens[0]) + "'");
    }
  }
  if (n < 0) throw GraphError("malformed header: missing 'p edge N M'");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return build(static_cast<int>(n), edges, line_of);
}

}  // namespace

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edgelist") return GraphFormat::edgelist;
  return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
  return f == GraphFormat::dimacs ? "dimacs" : "edgelist";
}

GraphFormat detect_format(std::string_view text) {
  for (const auto& l : content_lines(text, "#")) {
    if (l.tokens[0] == "c" || l.tokens[0] == "p") return GraphFormat::dimacs;
    return GraphFormat::edgelist;
  }
  return GraphFormat::edgelist;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pstr
