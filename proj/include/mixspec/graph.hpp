#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixspec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

/// A 2-coloring of the vertex set; index = vertex id.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = Color::Black) : colors_(n, fill) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  /// Parses "0101" / "BWBW" (0 and B are black).
  static Coloring parse(std::string_view text);
  /// Bit v of mask is the color of vertex v (1 = white).
  static Coloring from_mask(std::uint32_t mask, std::size_t n);

  std::size_t size() const { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  Color& operator[](Vertex v) { return colors_[v]; }
  void flip(Vertex v) { colors_[v] = opposite(colors_[v]); }

  /// Global black/white swap.
  Coloring swapped() const;
  std::uint32_t to_mask() const;
  /// 0/1 string, vertex 0 first.
  std::string to_string() const;
  std::span<const Color> colors() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse; self-loops and out-of-range ids throw InputError.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex v, Vertex w) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool connected() const;
  /// Each edge once as (lo, hi), sorted.
  std::vector<Edge> edges() const;
  /// Per-vertex neighbor bitmask; requires vertex_count <= 32.
  std::vector<std::uint32_t> neighbor_masks() const;
  /// Induced subgraph on `keep` (ascending); vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;  // sorted
  std::size_t edge_count_ = 0;
};

Graph build_graph(std::span<const Edge> edges, std::size_t vertex_count);

std::size_t mix_of_vertex(const Graph& g, const Coloring& c, Vertex v);
std::size_t mix_of_coloring(const Graph& g, const Coloring& c);

struct IntegrationResult {
  bool integrated = false;
  std::vector<Vertex> failing;
};

/// A vertex is integrated when at least half its neighbors carry the other color.
IntegrationResult is_integrated(const Graph& g, const Coloring& c);

struct NeighborhoodStats {
  std::vector<Vertex> pendants;        // degree exactly 1
  std::vector<Vertex> v_prime;         // everything else, isolated vertices included
  std::vector<Vertex> v_double_prime;  // v in V' with 2*lambda_v > deg(v)
  std::vector<std::size_t> lambda;     // non-pendant neighbor count, indexed by vertex
};

NeighborhoodStats neighborhood_stats(const Graph& g);

/// |N(v) ∩ N(w)|.
std::size_t mutual_degree(const Graph& g, Vertex v, Vertex w);

struct SrgParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t lambda_adj = 0;
  std::size_t lambda_nonadj = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters when g is strongly regular. Complete and edgeless graphs have no
/// non-adjacent (resp. adjacent) pairs; the missing parameter is reported as 0.
std::optional<SrgParams> detect_srg(const Graph& g);

}  // namespace mixspec
