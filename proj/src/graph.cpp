#include "mixspec/graph.hpp"

#include "mixspec/errors.hpp"

#include <algorithm>
#include <queue>

namespace mixspec {

Coloring Coloring::parse(std::string_view text) {
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '0':
      case 'B':
      case 'b':
        colors.push_back(Color::Black);
        break;
      case '1':
      case 'W':
      case 'w':
        colors.push_back(Color::White);
        break;
      default:
        throw InputError(std::string("bad coloring character '") + ch + "'");
    }
  }
  return Coloring(std::move(colors));
}

Coloring Coloring::from_mask(std::uint32_t mask, std::size_t n) {
  Coloring c(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) c.colors_[v] = Color::White;
  }
  return c;
}

Coloring Coloring::swapped() const {
  Coloring out = *this;
  for (auto& col : out.colors_) col = opposite(col);
  return out;
}

std::uint32_t Coloring::to_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < colors_.size() && v < 32; ++v) {
    if (colors_[v] == Color::White) mask |= 1u << v;
  }
  return mask;
}

std::string Coloring::to_string() const {
  std::string s;
  s.reserve(colors_.size());
  for (Color col : colors_) s.push_back(col == Color::White ? '1' : '0');
  return s;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for " + std::to_string(vertex_count) + " vertices");
    }
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  std::size_t ends = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    ends += nbrs.size();
  }
  g.edge_count_ = ends / 2;
  return g;
}

bool Graph::adjacent(Vertex v, Vertex w) const {
  const auto& nbrs = adjacency_[v];
  return std::binary_search(nbrs.begin(), nbrs.end(), w);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = adjacency_.front().size();
  for (const auto& nbrs : adjacency_) d = std::min(d, nbrs.size());
  return d;
}

bool Graph::connected() const {
  if (adjacency_.empty()) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == adjacency_.size();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

std::vector<std::uint32_t> Graph::neighbor_masks() const {
  if (adjacency_.size() > 32) throw CapExceeded("bitmask adjacency needs at most 32 vertices");
  std::vector<std::uint32_t> masks(adjacency_.size(), 0);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    for (Vertex w : adjacency_[v]) masks[v] |= 1u << w;
  }
  return masks;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> index(adjacency_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adjacency_[keep[i]]) {
      if (index[w] > static_cast<std::int64_t>(i)) {
        kept.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
      }
    }
  }
  return from_edges(keep.size(), kept);
}

Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count) {
  return Graph::from_edges(vertex_count, edges);
}

namespace {
void check_sizes(const Graph& g, const Coloring& c) {
  if (g.vertex_count() != c.size()) {
    throw InputError("coloring has " + std::to_string(c.size()) + " entries for a graph on " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}
}  // namespace

std::size_t mix_of_vertex(const Graph& g, const Coloring& c, Vertex v) {
  check_sizes(g, c);
  if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::size_t mix = 0;
  for (Vertex w : g.neighbors(v)) mix += c[w] != c[v];
  return mix;
}

std::size_t mix_of_coloring(const Graph& g, const Coloring& c) {
  check_sizes(g, c);
  std::size_t balanced = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) balanced += v < w && c[v] != c[w];
  }
  return balanced;
}

IntegrationResult is_integrated(const Graph& g, const Coloring& c) {
  check_sizes(g, c);
  IntegrationResult result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t mix = 0;
    for (Vertex w : g.neighbors(v)) mix += c[w] != c[v];
    if (2 * mix < g.degree(v)) result.failing.push_back(v);
  }
  result.integrated = result.failing.empty();
  return result;
}

NeighborhoodStats neighborhood_stats(const Graph& g) {
  NeighborhoodStats s;
  const std::size_t n = g.vertex_count();
  s.lambda.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      s.pendants.push_back(v);
    } else {
      s.v_prime.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) s.lambda[v] += g.degree(w) != 1;
  }
  for (Vertex v : s.v_prime) {
    if (2 * s.lambda[v] > g.degree(v)) s.v_double_prime.push_back(v);
  }
  return s;
}

std::size_t mutual_degree(const Graph& g, Vertex v, Vertex w) {
  auto a = g.neighbors(v);
  auto b = g.neighbors(w);
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  const std::size_t r = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  std::optional<std::size_t> adj, nonadj;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      std::size_t common = mutual_degree(g, v, w);
      auto& slot = g.adjacent(v, w) ? adj : nonadj;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return SrgParams{n, r, adj.value_or(0), nonadj.value_or(0)};
}

}  // namespace mixspec
