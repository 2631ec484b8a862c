#include "mixspec/kernels.hpp"

#include <bit>

namespace mixspec::kernels {

void sweep_scalar(const SweepProblem& p, std::uint32_t first, std::size_t count,
                  std::uint32_t* fail, std::uint32_t* cut) {
  const std::size_t n = p.adjacency.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t m = first + static_cast<std::uint32_t>(i);
    std::uint32_t bad = 0;
    std::uint32_t twice_cut = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t own = 0u - ((m >> v) & 1u);
      const auto mix = static_cast<std::int32_t>(std::popcount((m ^ own) & p.adjacency[v]));
      twice_cut += static_cast<std::uint32_t>(mix);
      if (2 * mix < p.threshold[v]) bad |= 1u << v;
    }
    fail[i] = bad;
    cut[i] = twice_cut / 2;
  }
}

}  // namespace mixspec::kernels
