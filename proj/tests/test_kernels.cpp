#include "mixspec/kernels.hpp"
#include "mixspec/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <vector>

using namespace mixspec;
using namespace mixspec::kernels;

namespace {

struct Instance {
  std::vector<std::uint32_t> adjacency;
  std::vector<std::int32_t> threshold;
  SweepProblem problem() const { return {adjacency, threshold}; }
};

Instance random_instance(std::size_t n, SplitMix64& rng) {
  Instance in;
  in.adjacency.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng.uniform01() < 0.4) {
        in.adjacency[a] |= 1u << b;
        in.adjacency[b] |= 1u << a;
      }
  for (std::size_t v = 0; v < n; ++v)
    in.threshold.push_back(static_cast<std::int32_t>(rng.below(2 * n + 3)) - 2);
  return in;
}

// Definition-level reference for a single mask.
void naive(const Instance& in, std::uint32_t mask, std::uint32_t& fail, std::uint32_t& cut) {
  fail = 0;
  cut = 0;
  for (std::size_t v = 0; v < in.adjacency.size(); ++v) {
    const std::uint32_t self = (mask >> v) & 1u;
    int mix = 0;
    for (std::size_t w = 0; w < in.adjacency.size(); ++w)
      if ((in.adjacency[v] >> w) & 1u) {
        const bool differs = ((mask >> w) & 1u) != self;
        mix += differs;
        if (w > v) cut += differs;
      }
    if (2 * mix < in.threshold[v]) fail |= 1u << v;
  }
}

}  // namespace

TEST(Kernels, ScalarMatchesDefinition) {
  SplitMix64 rng(5);
  for (std::size_t n : {1u, 2u, 5u, 9u, 13u}) {
    const Instance in = random_instance(n, rng);
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint32_t> fail(count), cut(count);
    sweep_scalar(in.problem(), 0, count, fail.data(), cut.data());
    for (std::uint32_t m = 0; m < count; ++m) {
      std::uint32_t f, c;
      naive(in, m, f, c);
      ASSERT_EQ(fail[m], f) << "n=" << n << " mask=" << m;
      ASSERT_EQ(cut[m], c) << "n=" << n << " mask=" << m;
    }
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!isa_available(Isa::Avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  SplitMix64 rng(6);
  // Odd counts and unaligned starts exercise the tail handling.
  for (std::size_t n : {1u, 3u, 8u, 16u, 17u, 24u, 31u, 32u}) {
    const Instance in = random_instance(n, rng);
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t count = 1 + rng.below(std::min<std::uint64_t>(600, (std::uint64_t{1} << n) - 1));
      const auto first = static_cast<std::uint32_t>(rng.below((std::uint64_t{1} << n) - count + 1));
      std::vector<std::uint32_t> fs(count), cs(count), fv(count), cv(count);
      SweepFn avx2 = sweep_for(Isa::Avx2);
      sweep_scalar(in.problem(), first, count, fs.data(), cs.data());
      avx2(in.problem(), first, count, fv.data(), cv.data());
      ASSERT_EQ(fs, fv) << "n=" << n << " first=" << first;
      ASSERT_EQ(cs, cv) << "n=" << n << " first=" << first;
    }
  }
}

TEST(Kernels, SweepAllCoversEveryMaskOnce) {
  SplitMix64 rng(8);
  const Instance in = random_instance(14, rng);
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!isa_available(isa)) continue;
    std::uint64_t seen = 0;
    std::uint32_t expected_first = 0;
    std::vector<std::uint32_t> cuts;
    sweep_all(in.problem(), 14, [&](std::uint32_t first, auto fail, auto cut) {
      EXPECT_EQ(first, expected_first);
      expected_first += static_cast<std::uint32_t>(fail.size());
      seen += fail.size();
      cuts.insert(cuts.end(), cut.begin(), cut.end());
    }, isa);
    EXPECT_EQ(seen, std::uint64_t{1} << 14) << isa_name(isa);
    for (std::uint32_t m = 0; m < cuts.size(); m += 997) {
      std::uint32_t f, c;
      naive(in, m, f, c);
      EXPECT_EQ(cuts[m], c);
    }
  }
}

TEST(Kernels, DegreeThresholds) {
  const std::vector<std::uint32_t> adj{0b110, 0b001, 0b001};
  std::int32_t storage[3];
  const auto t = degree_thresholds(adj, storage);
  EXPECT_EQ(t[0], 2);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t[2], 1);
}

TEST(Kernels, Dispatch) {
  EXPECT_TRUE(isa_available(Isa::Scalar));
  EXPECT_EQ(sweep_for(Isa::Scalar), &sweep_scalar);
  EXPECT_TRUE(isa_available(selected_isa()));
  EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
}
