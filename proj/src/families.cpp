#include "mixspec/families.hpp"

#include "mixspec/errors.hpp"

#include <string>

namespace mixspec {

std::string_view family_name(Family f) { return f == Family::Path ? "path" : "cycle"; }

Rational FamilyPmf::mass(std::size_t mix) const {
  auto it = counts.find(mix);
  if (it == counts.end()) return 0;
  return Rational(it->second, ic);
}

std::map<std::size_t, Rational> FamilyPmf::masses() const {
  std::map<std::size_t, Rational> out;
  for (const auto& [mix, count] : counts) out.emplace(mix, Rational(count, ic));
  return out;
}

std::vector<std::size_t> FamilyPmf::support() const {
  std::vector<std::size_t> keys;
  for (const auto& [mix, count] : counts) keys.push_back(mix);
  return keys;
}

CompleteCount ic_complete(std::size_t r) {
  if (r == 0) throw InputError("complete graph needs r >= 1");
  const std::size_t half = (r + 1) / 2;  // n with r = 2n or 2n-1
  if (r % 2 == 0) return {binomial(r, half), half * half};
  return {2 * binomial(r, half), half * half - half};
}

BicliqueCount ic_biclique(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InputError("biclique needs m, n >= 1");
  BicliqueCount out;
  out.spectrum[m * n] = 2;
  out.ic = 2;
  if (m % 2 == 0 && n % 2 == 0) {
    BigInt balanced = binomial(m, m / 2) * binomial(n, n / 2);
    out.spectrum[m * n / 2] = balanced;
    out.ic += balanced;
  }
  return out;
}

BigInt fibonacci(std::size_t n) {
  BigInt a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt lucas(std::size_t n) {
  BigInt a = 2, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt ic_path(std::size_t n) {
  if (n == 0) throw InputError("path needs n >= 1");
  if (n == 1) return 2;
  return 2 * fibonacci(n - 1);
}

FamilyPmf path_pmf(std::size_t n) {
  if (n < 2) throw InputError("path pmf needs n >= 2");
  FamilyPmf pmf{Family::Path, n, {}, ic_path(n)};
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t k = nn / 2; k <= nn - 1; ++k) {  // ceil((n-1)/2) = floor(n/2)
    BigInt c = 2 * binomial(k - 1, nn - k - 1);
    if (c != 0) pmf.counts.emplace(static_cast<std::size_t>(k), std::move(c));
  }
  return pmf;
}

BigInt ic_cycle(std::size_t n) {
  if (n < 2) throw InputError("cycle needs n >= 2");
  std::vector<BigInt> ic{0, 0, 2, 6, 6, 10};
  for (std::size_t m = 6; m <= n; ++m) ic.push_back(ic[m - 2] + 2 * ic[m - 3] + ic[m - 4]);
  return ic[n];
}

BigInt ic_cycle_lucas(std::size_t n) {
  static constexpr int kTwoCos[3] = {2, -1, -1};
  return lucas(n) + kTwoCos[n % 3];
}

FamilyPmf cycle_pmf(std::size_t n) {
  if (n < 2) throw InputError("cycle pmf needs n >= 2");
  FamilyPmf pmf{Family::Cycle, n, {}, ic_cycle(n)};
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t k = (nn + 3) / 4; k <= nn / 2; ++k) {
    BigInt c = 2 * binomial(2 * k - 1, nn - 2 * k) + 4 * binomial(2 * k - 1, nn - 2 * k - 1);
    if (c != 0) pmf.counts.emplace(static_cast<std::size_t>(2 * k), std::move(c));
  }
  return pmf;
}

std::size_t piece_length(WirePiece p) {
  switch (p) {
    case WirePiece::BW:
      return 2;
    case WirePiece::BBW:
    case WirePiece::BWW:
      return 3;
    case WirePiece::BBWW:
      return 4;
  }
  return 0;
}

std::vector<Color> piece_colors(WirePiece p) {
  using enum Color;
  switch (p) {
    case WirePiece::BW:
      return {Black, White};
    case WirePiece::BBW:
      return {Black, Black, White};
    case WirePiece::BWW:
      return {Black, White, White};
    case WirePiece::BBWW:
      return {Black, Black, White, White};
  }
  return {};
}

std::string_view piece_name(WirePiece p) {
  switch (p) {
    case WirePiece::BW:
      return "BW";
    case WirePiece::BBW:
      return "BBW";
    case WirePiece::BWW:
      return "BWW";
    case WirePiece::BBWW:
      return "BBWW";
  }
  return "?";
}

}  // namespace mixspec
