#pragma once

#include "mixspec/graph.hpp"

#include <cstdint>

namespace mixspec::gen {

Graph path(std::size_t n);
/// n >= 3; C_2 is a multigraph and has no Graph form.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Parts {0..m-1} and {m..m+n-1}.
Graph biclique(std::size_t m, std::size_t n);
Graph petersen();
/// d-dimensional hypercube Q_d.
Graph hypercube(unsigned d);
/// Connected graph on n vertices with minimum degree >= min_deg, drawn by
/// rejection from G(n, p). Deterministic in seed.
Graph random_connected(std::size_t n, double p, std::size_t min_deg, std::uint64_t seed);

}  // namespace mixspec::gen
