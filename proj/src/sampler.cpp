#include "mixspec/errors.hpp"
#include "mixspec/families.hpp"
#include "mixspec/rng.hpp"

#include <algorithm>
#include <set>

namespace mixspec {

namespace {

// Uniform `size`-subset of {0, ..., universe-1} (Floyd), ascending.
std::vector<std::uint64_t> uniform_subset(SplitMix64& rng, std::uint64_t universe, std::uint64_t size) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = universe - size; j < universe; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

// Runs of B with lengths summing to `total`, split into `parts` nonempty
// runs by a uniform choice of parts-1 of the total-1 interior cut points.
std::vector<std::size_t> uniform_composition(SplitMix64& rng, std::size_t total, std::size_t parts) {
  auto cuts = uniform_subset(rng, total - 1, parts - 1);
  std::vector<std::size_t> runs;
  std::size_t prev = 0;
  for (auto c : cuts) {
    runs.push_back(c + 1 - prev);
    prev = c + 1;
  }
  runs.push_back(total - prev);
  return runs;
}

// Edge word -> coloring: a balanced edge ('B') flips the color.
Coloring decode(const std::string& word, std::size_t n, Color first) {
  Coloring c(n);
  c[0] = first;
  for (std::size_t i = 0; i + 1 < n; ++i) c[i + 1] = word[i] == 'B' ? opposite(c[i]) : c[i];
  return c;
}

}  // namespace

Coloring sample_path_at(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  if (n < 2) throw InputError("path sampler needs n >= 2");
  SplitMix64 rng = SplitMix64::for_index(seed, index);
  const FamilyPmf pmf = path_pmf(n);
  BigInt r = rng.below(pmf.ic);
  std::size_t k = 0;
  for (const auto& [mix, count] : pmf.counts) {
    if (r < count) {
      k = mix;
      break;
    }
    r -= count;
  }
  // k balanced edges in n-k runs separated by single unbalanced edges.
  const auto runs = uniform_composition(rng, k, n - k);
  std::string word;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) word.push_back('U');
    word.append(runs[i], 'B');
  }
  const Color first = (rng.next() >> 63) ? Color::White : Color::Black;
  return decode(word, n, first);
}

std::vector<Coloring> sample_path(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<Coloring> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_path_at(n, seed, i));
  return out;
}

Coloring sample_cycle_at(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  if (n < 3) throw InputError("cycle sampler needs n >= 3");
  SplitMix64 rng = SplitMix64::for_index(seed, index);
  const auto nn = static_cast<std::int64_t>(n);
  BigInt r = rng.below(ic_cycle(n));

  // Cyclic edge words with 2k B's and n-2k U's, no UU, not both ends U.
  // Bookended by B: n-2k+1 runs. Mixed ends: n-2k runs, U leads or trails.
  std::size_t k = 0;
  bool bookended = false;
  for (std::int64_t kk = (nn + 3) / 4; kk <= nn / 2 && k == 0; ++kk) {
    for (bool ends_b : {true, false}) {
      BigInt w = ends_b ? 2 * binomial(2 * kk - 1, nn - 2 * kk) : 4 * binomial(2 * kk - 1, nn - 2 * kk - 1);
      if (r < w) {
        k = static_cast<std::size_t>(kk);
        bookended = ends_b;
        break;
      }
      r -= w;
    }
  }
  if (k == 0) throw std::logic_error("cycle sampler: weight table exhausted");

  const std::size_t unbalanced = n - 2 * k;
  std::string word;
  if (bookended) {
    const auto runs = uniform_composition(rng, 2 * k, unbalanced + 1);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i) word.push_back('U');
      word.append(runs[i], 'B');
    }
  } else {
    const auto runs = uniform_composition(rng, 2 * k, unbalanced);
    const bool lead_u = rng.next() >> 63;
    for (auto len : runs) {
      if (lead_u) word.push_back('U');
      word.append(len, 'B');
      if (!lead_u) word.push_back('U');
    }
  }
  const Color first = (rng.next() >> 63) ? Color::White : Color::Black;
  return decode(word, n, first);
}

std::vector<Coloring> sample_cycle(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<Coloring> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_cycle_at(n, seed, i));
  return out;
}

}  // namespace mixspec
