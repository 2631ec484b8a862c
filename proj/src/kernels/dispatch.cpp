#include "mixspec/kernels.hpp"

#include "mixspec/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

namespace mixspec::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(MIXSPEC_BUILD_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa selected_isa() {
  static const Isa chosen = [] {
    Isa best = isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    if (const char* env = std::getenv("MIXSPEC_ISA")) {
      std::string want(env);
      if (want == "scalar") return Isa::Scalar;
    }
    return best;
  }();
  return chosen;
}

SweepFn sweep_for(Isa isa) {
#if defined(MIXSPEC_BUILD_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return &sweep_avx2;
#endif
  (void)isa;
  return &sweep_scalar;
}

std::span<const std::int32_t> degree_thresholds(std::span<const std::uint32_t> adjacency,
                                                std::int32_t* storage) {
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    storage[v] = std::popcount(adjacency[v]);
  }
  return {storage, adjacency.size()};
}

void sweep_all(const SweepProblem& p, unsigned bits, const BlockVisitor& visit, Isa isa) {
  if (bits > 31) throw CapExceeded("exhaustive sweep limited to 31 free bits");
  constexpr std::size_t kBlock = 4096;
  const SweepFn fn = sweep_for(isa);
  const std::uint64_t total = std::uint64_t{1} << bits;
  std::vector<std::uint32_t> fail(kBlock), cut(kBlock);
  for (std::uint64_t first = 0; first < total; first += kBlock) {
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, total - first));
    fn(p, static_cast<std::uint32_t>(first), count, fail.data(), cut.data());
    visit(static_cast<std::uint32_t>(first), {fail.data(), count}, {cut.data(), count});
  }
}

}  // namespace mixspec::kernels
