#include "mixspec/enumerator.hpp"

#include "mixspec/errors.hpp"
#include "mixspec/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace mixspec {

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("MIXSPEC_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return std::min<std::size_t>(v, kHardCap);
  }
  return kDefaultCap;
}

void check_cap(const Graph& g, std::size_t cap) {
  cap = std::min(cap, kHardCap);
  if (g.vertex_count() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) +
                      " vertices; enumeration cap is " + std::to_string(cap));
  }
}

namespace {

// Depth-first assignment of vertices 0..n-1, Black before White. same[v]
// counts assigned neighbors sharing v's color; once 2*same[v] > deg(v) the
// vertex can no longer reach half of its neighbors opposite.
class Backtracker {
 public:
  Backtracker(const Graph& g, const std::function<void(const Coloring&)>& visit)
      : g_(g), visit_(visit), coloring_(g.vertex_count()), same_(g.vertex_count(), 0) {}

  void run() { descend(0); }

 private:
  void descend(Vertex next) {
    if (next == g_.vertex_count()) {
      if (is_integrated(g_, coloring_).integrated) visit_(coloring_);
      return;
    }
    for (Color c : {Color::Black, Color::White}) {
      if (assign(next, c)) descend(next + 1);
      unassign(next, c);
    }
  }

  bool assign(Vertex v, Color c) {
    coloring_[v] = c;
    bool viable = true;
    std::size_t own = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (w >= v || coloring_[w] != c) continue;
      ++own;
      ++same_[w];
      if (2 * same_[w] > g_.degree(w)) viable = false;
    }
    same_[v] = own;
    if (2 * own > g_.degree(v)) viable = false;
    return viable;
  }

  void unassign(Vertex v, Color c) {
    for (Vertex w : g_.neighbors(v)) {
      if (w < v && coloring_[w] == c) --same_[w];
    }
    same_[v] = 0;
  }

  const Graph& g_;
  const std::function<void(const Coloring&)>& visit_;
  Coloring coloring_;
  std::vector<std::size_t> same_;
};

}  // namespace

void for_each_integrated(const Graph& g, const std::function<void(const Coloring&)>& visit,
                         std::size_t cap) {
  check_cap(g, cap);
  Backtracker(g, visit).run();
}

std::vector<Coloring> enumerate_integrated(const Graph& g, std::size_t cap) {
  std::vector<Coloring> out;
  for_each_integrated(g, [&](const Coloring& c) { out.push_back(c); }, cap);
  return out;
}

std::vector<std::size_t> MixHistogram::ims() const {
  std::vector<std::size_t> keys;
  for (auto [mix, count] : counts) {
    if (count) keys.push_back(mix);
  }
  return keys;
}

std::size_t MixHistogram::ims_min() const {
  if (counts.empty()) throw Inapplicable("empty spectrum");
  return counts.begin()->first;
}

std::size_t MixHistogram::ims_max() const {
  if (counts.empty()) throw Inapplicable("empty spectrum");
  return counts.rbegin()->first;
}

MixHistogram mix_histogram(const Graph& g, std::size_t cap) {
  MixHistogram h;
  for_each_integrated(g, [&](const Coloring& c) {
    ++h.counts[mix_of_coloring(g, c)];
    ++h.ic;
  }, cap);
  return h;
}

MixHistogram sweep_histogram(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  const auto adj = g.neighbor_masks();
  std::vector<std::int32_t> thr(adj.size());
  kernels::SweepProblem p{adj, kernels::degree_thresholds(adj, thr.data())};
  MixHistogram h;
  kernels::sweep_all(p, static_cast<unsigned>(g.vertex_count()),
                     [&](std::uint32_t, std::span<const std::uint32_t> fail,
                         std::span<const std::uint32_t> cut) {
                       for (std::size_t i = 0; i < fail.size(); ++i) {
                         if (fail[i] == 0) {
                           ++h.counts[cut[i]];
                           ++h.ic;
                         }
                       }
                     });
  return h;
}

std::size_t for_each_max_cut(const Graph& g, const std::function<void(std::uint32_t)>& visit,
                             std::size_t cap) {
  check_cap(g, cap);
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    if (visit) visit(0);
    return 0;
  }
  const auto adj = g.neighbor_masks();
  std::vector<std::int32_t> thr(n, 0);
  kernels::SweepProblem p{adj, thr};
  // Vertex n-1 pinned black: the other half are color swaps with the same cut.
  const unsigned bits = static_cast<unsigned>(n - 1);
  std::uint32_t best = 0;
  kernels::sweep_all(p, bits, [&](std::uint32_t, std::span<const std::uint32_t>,
                                  std::span<const std::uint32_t> cut) {
    for (auto c : cut) best = std::max(best, c);
  });
  if (visit) {
    const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
    kernels::sweep_all(p, bits, [&](std::uint32_t first, std::span<const std::uint32_t>,
                                    std::span<const std::uint32_t> cut) {
      for (std::size_t i = 0; i < cut.size(); ++i) {
        if (cut[i] == best) {
          const std::uint32_t m = first + static_cast<std::uint32_t>(i);
          visit(m);
          visit(~m & full);
        }
      }
    });
  }
  return best;
}

std::size_t max_cut(const Graph& g, std::size_t cap) { return for_each_max_cut(g, nullptr, cap); }

LocalSearchResult propp_local_search(const Graph& g, Coloring start) {
  if (start.size() != g.vertex_count()) throw InputError("coloring size does not match graph");
  LocalSearchResult r{std::move(start), 0, {}};
  r.mix_trace.push_back(mix_of_coloring(g, r.coloring));
  for (;;) {
    auto check = is_integrated(g, r.coloring);
    if (check.integrated) break;
    r.coloring.flip(check.failing.front());
    ++r.flips;
    r.mix_trace.push_back(mix_of_coloring(g, r.coloring));
  }
  return r;
}

}  // namespace mixspec
