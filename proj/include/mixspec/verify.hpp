#pragma once

#include "mixspec/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixspec {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Paths, cycles, complete graphs and bicliques up to `max_vertices`, the
/// cube Q3 and Petersen graph (when they fit), and `random_count` seeded
/// connected graphs with minimum degree >= 2 on 4..min(max_vertices, 10) vertices.
std::vector<NamedGraph> standard_corpus(std::size_t max_vertices, std::size_t random_count,
                                        std::uint64_t seed = 20240601);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool all_pass() const;
};

/// Formula-versus-enumeration cross checks for every family up to max_n,
/// generating functions against pmfs, and bound soundness on the corpus.
VerifyReport run_verify(std::size_t max_n);

}  // namespace mixspec
