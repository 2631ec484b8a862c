#pragma once

#include "mixspec/exact.hpp"
#include "mixspec/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mixspec {

enum class BoundVariant { General, MinDegree, Regular, Srg };

std::string_view variant_name(BoundVariant v);
/// "general", "min-degree", "regular", "srg"; throws InputError otherwise.
BoundVariant parse_variant(std::string_view name);

/// Second-moment upper bound on the number of integrated colorings.
///
/// A semi-random coloring colors the non-pendant vertices V' by fair coins
/// and gives each pendant the color opposite its neighbor. X counts the
/// integrated vertices of V'' (the only ones that can fail); mu = E[X],
/// sigma_sq = Var[X], and Cantelli's inequality bounds Pr[X = |V''|].
struct BoundReport {
  BoundVariant variant = BoundVariant::General;
  bool applicable = false;
  std::string reason;  // why not applicable, empty otherwise
  std::size_t v_prime_size = 0;
  std::size_t v_double_prime_size = 0;
  std::size_t isolated_stripped = 0;  // bound includes the factor 2^isolated_stripped
  Rational mu;
  Rational sigma_sq;
  Rational upper_bound;
  bool exact = false;  // V'' empty: every semi-random coloring is integrated
  std::optional<BigInt> exact_ic;
};

/// alpha_{i,j}(v, w) from the raw neighborhood numbers: lambda_v, lambda_w,
/// their common-neighbor count, and the two degrees.
Rational alpha_sum(std::size_t lambda_v, std::size_t lambda_w, std::size_t lambda_vw, std::size_t deg_v,
                   std::size_t deg_w, int i, int j);

/// Probability that v and w are both integrated given their color relation
/// (i = 1: different colors) and adjacency j. v, w must be distinct members
/// of V'' and j must match their adjacency.
Rational alpha(const Graph& g, const NeighborhoodStats& stats, Vertex v, Vertex w, int i, int j);

/// Sum over k >= lambda - deg/2 of C(lambda, k) / 2^lambda.
Rational integration_probability(std::size_t lambda, std::size_t degree);

BoundReport bound_general(const Graph& g);
BoundReport bound_specialized(const Graph& g, BoundVariant variant);

struct AutoBound {
  BoundReport selected;  // strongest applicable: srg, regular, min-degree, general
  BoundReport general;
};

AutoBound bound_auto(const Graph& g);

struct SemirandomMoments {
  std::size_t v_prime_size = 0;
  BigInt integrated;         // semi-random outcomes that are integrated
  Rational prob_integrated;  // integrated / 2^|V'|
  Rational ex;               // E[X]
  Rational ex2;              // E[X^2]
  std::vector<Vertex> v_double_prime;
  /// joint[a][b] = Pr[I_v I_w] for v = v_double_prime[a], w = v_double_prime[b] (if requested).
  std::vector<std::vector<Rational>> joint;
};

inline constexpr std::size_t kSemirandomCap = 22;

/// Exhaustive over all 2^|V'| semi-random colorings via the sweep kernel.
SemirandomMoments semirandom_oracle(const Graph& g, bool pair_probabilities = false,
                                    std::size_t cap = kSemirandomCap);

struct ExtremalBounds {
  Rational ims_lower;                    // |E| / 2
  BigInt edwards;                        // ceil(|E|/2 + sqrt(|E|/8 + 1/64) - 1/8)
  std::optional<Rational> edwards_erdos;  // |E|/2 + (|V|-1)/4, connected graphs only
};

ExtremalBounds extremal_bounds(const Graph& g);

}  // namespace mixspec
