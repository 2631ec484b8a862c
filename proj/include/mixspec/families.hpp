#pragma once

#include "mixspec/exact.hpp"
#include "mixspec/graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace mixspec {

enum class Family { Path, Cycle };

std::string_view family_name(Family f);

/// Exact law of the mixing number of a uniform integrated coloring of P_n or C_n.
struct FamilyPmf {
  Family family = Family::Path;
  std::size_t n = 0;
  std::map<std::size_t, BigInt> counts;  // mix -> colorings; zero entries omitted
  BigInt ic;

  Rational mass(std::size_t mix) const;
  std::map<std::size_t, Rational> masses() const;
  std::vector<std::size_t> support() const;
};

struct CompleteCount {
  BigInt ic;
  std::size_t fixed_mix = 0;
};

/// K_r, r >= 1.
CompleteCount ic_complete(std::size_t r);

struct BicliqueCount {
  BigInt ic;
  std::map<std::size_t, BigInt> spectrum;  // mix -> multiplicity
};

/// K_{m,n}, m, n >= 1.
BicliqueCount ic_biclique(std::size_t m, std::size_t n);

/// F_0 = 0, F_1 = F_2 = 1.
BigInt fibonacci(std::size_t n);
/// L_0 = 2, L_1 = 1, L_2 = 3.
BigInt lucas(std::size_t n);

BigInt ic_path(std::size_t n);
FamilyPmf path_pmf(std::size_t n);

/// By the four-term recurrence from ic(C_2..C_5) = 2, 6, 6, 10. C_2 is the
/// two-vertex multigraph with a doubled edge.
BigInt ic_cycle(std::size_t n);
/// L_n + 2cos(2n pi/3), with the cosine term as the integer table {2, -1, -1}[n mod 3].
BigInt ic_cycle_lucas(std::size_t n);
FamilyPmf cycle_pmf(std::size_t n);

// Uniform samplers over IC(P_n) / IC(C_n). Sample i depends only on
// (n, seed, i), so any index range can be generated independently.
Coloring sample_path_at(std::size_t n, std::uint64_t seed, std::uint64_t index);
std::vector<Coloring> sample_path(std::size_t n, std::uint64_t seed, std::size_t count);
Coloring sample_cycle_at(std::size_t n, std::uint64_t seed, std::uint64_t index);
std::vector<Coloring> sample_cycle(std::size_t n, std::uint64_t seed, std::size_t count);

/// Necklace building blocks: a black run followed by a white run, each of length 1 or 2.
enum class WirePiece { BW, BBW, BWW, BBWW };

inline constexpr std::array<WirePiece, 4> kWirePieces{WirePiece::BW, WirePiece::BBW, WirePiece::BWW,
                                                      WirePiece::BBWW};

std::size_t piece_length(WirePiece p);
std::vector<Color> piece_colors(WirePiece p);
std::string_view piece_name(WirePiece p);

/// Integrated colorings of C_n built by chaining wire pieces around the
/// cycle, every phase offset of the first piece included. Sorted
/// lexicographically. n >= 2.
std::vector<Coloring> necklace_enumerate(std::size_t n, std::size_t cap);

}  // namespace mixspec
