#include "mixspec/generators.hpp"

#include "mixspec/errors.hpp"
#include "mixspec/rng.hpp"

#include <vector>

namespace mixspec::gen {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("simple cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) e.emplace_back(v, w);
  return Graph::from_edges(n, e);
}

Graph biclique(std::size_t m, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < m; ++v)
    for (Vertex w = 0; w < n; ++w) e.emplace_back(v, static_cast<Vertex>(m + w));
  return Graph::from_edges(m + n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

Graph hypercube(unsigned d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (unsigned b = 0; b < d; ++b) {
      Vertex w = v ^ (1u << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph::from_edges(n, e);
}

Graph random_connected(std::size_t n, double p, std::size_t min_deg, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w)
        if (rng.uniform01() < p) e.emplace_back(v, w);
    Graph g = Graph::from_edges(n, e);
    if (g.connected() && g.min_degree() >= min_deg) return g;
  }
  throw Inapplicable("random_connected: no graph met the constraints");
}

}  // namespace mixspec::gen
