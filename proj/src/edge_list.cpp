#include "mixspec/edge_list.hpp"

#include "mixspec/errors.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mixspec {

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

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value > 0xffffffffull) {
    throw InputError("line " + std::to_string(line_no) + ": not a vertex id: '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::uint64_t max_id = 0;
  bool any = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.front() == "n") {
      if (toks.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      if (declared) throw InputError("line " + std::to_string(line_no) + ": duplicate 'n' header");
      declared = parse_id(toks[1], line_no);
      continue;
    }
    if (toks.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    auto a = parse_id(toks[0], line_no);
    auto b = parse_id(toks[1], line_no);
    if (a == b) throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    edge_lines.push_back(line_no);
    max_id = std::max({max_id, a, b});
    any = true;
  }

  std::uint64_t n = declared ? *declared : (any ? max_id + 1 : 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first >= n || edges[i].second >= n) {
      throw InputError("line " + std::to_string(edge_lines[i]) + ": vertex id out of range for n " +
                       std::to_string(n));
    }
  }
  return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace mixspec
