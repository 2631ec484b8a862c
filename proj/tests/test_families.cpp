#include "mixspec/enumerator.hpp"
#include "mixspec/errors.hpp"
#include "mixspec/families.hpp"
#include "mixspec/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

using namespace mixspec;

namespace {

Rational q(long a, long b) { return Rational(a, b); }

std::map<std::size_t, Rational> normalized(const std::map<std::size_t, std::uint64_t>& h) {
  std::uint64_t total = 0;
  for (auto [k, c] : h) total += c;
  std::map<std::size_t, Rational> out;
  for (auto [k, c] : h) out[k] = Rational(BigInt(c), BigInt(total));
  return out;
}

std::set<std::string> strings(const std::vector<Coloring>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.to_string());
  return out;
}

}  // namespace

TEST(Complete, Examples) {
  EXPECT_EQ(ic_complete(4).ic, 6);
  EXPECT_EQ(ic_complete(4).fixed_mix, 4u);
  EXPECT_EQ(ic_complete(5).ic, 20);
  EXPECT_EQ(ic_complete(5).fixed_mix, 6u);
  EXPECT_EQ(ic_complete(1).ic, 2);
  EXPECT_EQ(ic_complete(1).fixed_mix, 0u);
}

TEST(Complete, AgainstEnumeration) {
  for (std::size_t r = 1; r <= 9; ++r) {
    const auto h = oracle::histogram(gen::complete(r));
    const auto f = ic_complete(r);
    ASSERT_EQ(h.size(), 1u) << r;
    EXPECT_EQ(h.begin()->first, f.fixed_mix) << r;
    EXPECT_EQ(BigInt(h.begin()->second), f.ic) << r;
  }
}

TEST(Biclique, Examples) {
  auto a = ic_biclique(2, 3);
  EXPECT_EQ(a.ic, 2);
  EXPECT_EQ(a.spectrum, (std::map<std::size_t, BigInt>{{6, 2}}));
  auto b = ic_biclique(2, 2);
  EXPECT_EQ(b.ic, 6);
  EXPECT_EQ(b.spectrum, (std::map<std::size_t, BigInt>{{2, 4}, {4, 2}}));
  auto c = ic_biclique(4, 2);
  EXPECT_EQ(c.ic, 14);
  EXPECT_EQ(c.spectrum, (std::map<std::size_t, BigInt>{{4, 12}, {8, 2}}));
}

TEST(Biclique, AgainstEnumeration) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto h = oracle::histogram(gen::biclique(m, n));
      const auto f = ic_biclique(m, n);
      std::map<std::size_t, BigInt> got;
      BigInt total = 0;
      for (auto [k, c] : h) {
        got[k] = c;
        total += c;
      }
      EXPECT_EQ(got, f.spectrum) << m << "," << n;
      EXPECT_EQ(total, f.ic) << m << "," << n;
    }
}

TEST(Sequences, FibonacciLucas) {
  EXPECT_EQ(fibonacci(0), 0);
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(6), 18);
  EXPECT_EQ(lucas(7), 29);
  for (std::size_t n = 1; n < 80; ++n) EXPECT_EQ(lucas(n), fibonacci(n - 1) + fibonacci(n + 1));
}

TEST(Path, Counts) {
  EXPECT_EQ(ic_path(1), 2);
  EXPECT_EQ(ic_path(2), 2);
  EXPECT_EQ(ic_path(3), 2);
  EXPECT_EQ(ic_path(5), 6);
  EXPECT_EQ(ic_path(10), 68);
  for (std::size_t n = 4; n < 100; ++n) EXPECT_EQ(ic_path(n), ic_path(n - 1) + ic_path(n - 2));
}

TEST(Path, Pmf) {
  EXPECT_EQ(path_pmf(4).masses(), (std::map<std::size_t, Rational>{{2, q(1, 2)}, {3, q(1, 2)}}));
  EXPECT_EQ(path_pmf(5).masses(), (std::map<std::size_t, Rational>{{3, q(2, 3)}, {4, q(1, 3)}}));
  EXPECT_EQ(path_pmf(2).masses(), (std::map<std::size_t, Rational>{{1, q(1, 1)}}));
  EXPECT_THROW(path_pmf(1), InputError);
}

TEST(Path, AgainstEnumeration) {
  EXPECT_EQ(BigInt(mix_histogram(gen::path(1)).ic), ic_path(1));
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto h = oracle::histogram(gen::path(n));
    EXPECT_EQ(path_pmf(n).masses(), normalized(h)) << n;
    EXPECT_EQ(BigInt(mix_histogram(gen::path(n)).ic), ic_path(n)) << n;
  }
}

TEST(Path, MassSumIdentity) {
  for (std::int64_t n = 2; n <= 64; ++n) {
    BigInt sum = 0;
    for (std::int64_t k = (n - 1 + 1) / 2; k <= n - 1; ++k) sum += 2 * binomial(k - 1, n - k - 1);
    EXPECT_EQ(sum, ic_path(static_cast<std::size_t>(n))) << n;
    Rational total = 0;
    for (const auto& [k, m] : path_pmf(static_cast<std::size_t>(n)).masses()) total += m;
    EXPECT_EQ(total, 1);
  }
}

TEST(Cycle, Counts) {
  EXPECT_EQ(ic_cycle(2), 2);
  EXPECT_EQ(ic_cycle(3), 6);
  EXPECT_EQ(ic_cycle(4), 6);
  EXPECT_EQ(ic_cycle(5), 10);
  EXPECT_EQ(ic_cycle(6), 20);
  EXPECT_EQ(ic_cycle(7), 28);
}

TEST(Cycle, LucasForm) {
  for (std::size_t n = 2; n <= 64; ++n) EXPECT_EQ(ic_cycle(n), ic_cycle_lucas(n)) << n;
}

TEST(Cycle, Pmf) {
  EXPECT_EQ(cycle_pmf(4).masses(), (std::map<std::size_t, Rational>{{2, q(2, 3)}, {4, q(1, 3)}}));
  EXPECT_EQ(cycle_pmf(6).masses(), (std::map<std::size_t, Rational>{{4, q(9, 10)}, {6, q(1, 10)}}));
  EXPECT_EQ(cycle_pmf(5).masses(), (std::map<std::size_t, Rational>{{4, q(1, 1)}}));
  EXPECT_EQ(cycle_pmf(2).masses(), (std::map<std::size_t, Rational>{{2, q(1, 1)}}));
}

TEST(Cycle, AgainstEnumeration) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto h = oracle::histogram(gen::cycle(n));
    EXPECT_EQ(cycle_pmf(n).masses(), normalized(h)) << n;
    EXPECT_EQ(BigInt(mix_histogram(gen::cycle(n)).ic), ic_cycle(n)) << n;
  }
}

TEST(Cycle, MassSumIdentity) {
  for (std::int64_t n = 3; n <= 64; ++n) {
    BigInt sum = 0;
    for (std::int64_t k = 0; 2 * k <= n; ++k)
      sum += 2 * binomial(2 * k - 1, n - 2 * k) + 4 * binomial(2 * k - 1, n - 2 * k - 1);
    EXPECT_EQ(sum, ic_cycle(static_cast<std::size_t>(n))) << n;
  }
}

TEST(Cycle, SupportEvenAndInRange) {
  for (std::size_t n = 3; n <= 40; ++n)
    for (std::size_t k : cycle_pmf(n).support()) {
      EXPECT_EQ(k % 2, 0u);
      EXPECT_GE(2 * k, n);
      EXPECT_LE(k, n);
    }
}

TEST(Necklace, Pieces) {
  EXPECT_EQ(piece_length(WirePiece::BBWW), 4u);
  EXPECT_EQ(piece_name(WirePiece::BWW), "BWW");
  EXPECT_EQ(piece_colors(WirePiece::BBW), (std::vector<Color>{Color::Black, Color::Black, Color::White}));
}

TEST(Necklace, Examples) {
  EXPECT_EQ(necklace_enumerate(4, 24).size(), 6u);
  EXPECT_EQ(necklace_enumerate(5, 24).size(), 10u);
  EXPECT_EQ(strings(necklace_enumerate(7, 24)), oracle::integrated_strings(gen::cycle(7)));
}

TEST(Necklace, AgainstEnumeration) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto cs = necklace_enumerate(n, 24);
    EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
    EXPECT_EQ(BigInt(cs.size()), ic_cycle(n)) << n;
    EXPECT_EQ(strings(cs), oracle::integrated_strings(gen::cycle(n))) << n;
  }
}

TEST(Necklace, Cap) { EXPECT_THROW(necklace_enumerate(30, 24), CapExceeded); }

TEST(Sampler, PathSmall) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = sample_path(3, seed, 5);
    for (const auto& c : s) EXPECT_TRUE(c.to_string() == "010" || c.to_string() == "101");
  }
  std::set<std::string> seen;
  for (const auto& c : sample_path(2, 1, 200)) seen.insert(c.to_string());
  EXPECT_EQ(seen, (std::set<std::string>{"01", "10"}));
}

TEST(Sampler, PathP8Frequencies) {
  const std::size_t count = 200000;
  std::map<std::string, std::size_t> freq;
  const Graph g = gen::path(8);
  for (const auto& c : sample_path(8, 42, count)) {
    ASSERT_TRUE(is_integrated(g, c).integrated);
    ++freq[c.to_string()];
  }
  EXPECT_EQ(freq.size(), 26u);
  const double p = 1.0 / 26;
  const double sd = std::sqrt(count * p * (1 - p));
  for (const auto& [s, f] : freq) EXPECT_NEAR(static_cast<double>(f), count * p, 4 * sd) << s;
}

TEST(Sampler, CycleC4MixFrequency) {
  const Graph g = gen::cycle(4);
  std::size_t mix2 = 0;
  const auto samples = sample_cycle(4, 9, 60000);
  for (const auto& c : samples) {
    ASSERT_TRUE(is_integrated(g, c).integrated);
    mix2 += mix_of_coloring(g, c) == 2;
  }
  EXPECT_NEAR(static_cast<double>(mix2) / samples.size(), 2.0 / 3, 0.01);
}

TEST(Sampler, CycleC3Support) {
  std::set<std::string> seen;
  for (const auto& c : sample_cycle(3, 5, 3000)) seen.insert(c.to_string());
  EXPECT_EQ(seen, oracle::integrated_strings(gen::cycle(3)));
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Sampler, DeterministicAndShardable) {
  const auto all = sample_cycle(12, 77, 50);
  EXPECT_EQ(all, sample_cycle(12, 77, 50));
  for (std::uint64_t i = 0; i < 50; ++i) EXPECT_EQ(sample_cycle_at(12, 77, i), all[i]);
  const auto paths = sample_path(15, 3, 30);
  for (std::uint64_t i = 0; i < 30; ++i) EXPECT_EQ(sample_path_at(15, 3, i), paths[i]);
  EXPECT_NE(sample_path(15, 3, 30), sample_path(15, 4, 30));
}

TEST(Sampler, LargeInstancesIntegrated) {
  for (std::size_t n : {40u, 101u, 300u}) {
    const Graph p = gen::path(n);
    const Graph c = gen::cycle(n);
    for (const auto& s : sample_path(n, 1, 20)) EXPECT_TRUE(is_integrated(p, s).integrated);
    for (const auto& s : sample_cycle(n, 1, 20)) {
      EXPECT_TRUE(is_integrated(c, s).integrated);
      const std::size_t m = mix_of_coloring(c, s);
      EXPECT_EQ(m % 2, 0u);
      EXPECT_GE(2 * m, n);
    }
  }
}
