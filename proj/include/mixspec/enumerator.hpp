#pragma once

#include "mixspec/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace mixspec {

inline constexpr std::size_t kDefaultCap = 24;
inline constexpr std::size_t kHardCap = 32;

/// Enumeration cap: MIXSPEC_CAP if set, else kDefaultCap; never above kHardCap.
std::size_t enumeration_cap();

/// Throws CapExceeded when g has more than `cap` vertices.
void check_cap(const Graph& g, std::size_t cap);

/// Visits every integrated coloring of g exactly once in lexicographic order
/// of the color array (vertex 0 most significant, Black < White).
void for_each_integrated(const Graph& g, const std::function<void(const Coloring&)>& visit,
                         std::size_t cap = enumeration_cap());

std::vector<Coloring> enumerate_integrated(const Graph& g, std::size_t cap = enumeration_cap());

struct MixHistogram {
  std::map<std::size_t, std::uint64_t> counts;  // mix -> number of integrated colorings
  std::uint64_t ic = 0;

  std::vector<std::size_t> ims() const;
  std::size_t ims_min() const;
  std::size_t ims_max() const;
  friend bool operator==(const MixHistogram&, const MixHistogram&) = default;
};

MixHistogram mix_histogram(const Graph& g, std::size_t cap = enumeration_cap());

/// Same histogram by sweeping all 2^n colorings through the SIMD kernel.
/// Independent of the backtracking search; used as its oracle.
MixHistogram sweep_histogram(const Graph& g, std::size_t cap = enumeration_cap());

/// Largest number of balanced edges over all colorings.
std::size_t max_cut(const Graph& g, std::size_t cap = enumeration_cap());

/// Calls visit(mask) for every coloring mask attaining max_cut.
std::size_t for_each_max_cut(const Graph& g, const std::function<void(std::uint32_t)>& visit,
                             std::size_t cap = enumeration_cap());

struct LocalSearchResult {
  Coloring coloring;
  std::size_t flips = 0;
  std::vector<std::size_t> mix_trace;  // mix before the first flip, then after each flip
};

/// Flips the lowest-indexed non-integrated vertex until none remains.
LocalSearchResult propp_local_search(const Graph& g, Coloring start);

}  // namespace mixspec
