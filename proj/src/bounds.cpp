#include "mixspec/bounds.hpp"

#include "mixspec/errors.hpp"
#include "mixspec/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mixspec {

std::string_view variant_name(BoundVariant v) {
  switch (v) {
    case BoundVariant::General:
      return "general";
    case BoundVariant::MinDegree:
      return "min-degree";
    case BoundVariant::Regular:
      return "regular";
    case BoundVariant::Srg:
      return "srg";
  }
  return "?";
}

BoundVariant parse_variant(std::string_view name) {
  if (name == "general") return BoundVariant::General;
  if (name == "min-degree") return BoundVariant::MinDegree;
  if (name == "regular") return BoundVariant::Regular;
  if (name == "srg") return BoundVariant::Srg;
  throw InputError("unknown bound variant '" + std::string(name) + "'");
}

namespace {

// tail[t] = sum_{x >= t} C(m, x), for t in [0, m + 1].
std::vector<BigInt> binomial_tails(std::size_t m) {
  std::vector<BigInt> tail(m + 2, 0);
  for (std::size_t x = m + 1; x-- > 0;) tail[x] = tail[x + 1] + binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(x));
  return tail;
}

const BigInt& tail_at(const std::vector<BigInt>& tail, std::int64_t t) {
  if (t <= 0) return tail.front();
  if (t >= static_cast<std::int64_t>(tail.size())) return tail.back();
  return tail[static_cast<std::size_t>(t)];
}

// Smallest integer x with 2x >= doubled.
std::int64_t ceil_half(std::int64_t doubled) { return doubled >= 0 ? (doubled + 1) / 2 : -((-doubled) / 2); }

}  // namespace

Rational alpha_sum(std::size_t lambda_v, std::size_t lambda_w, std::size_t lambda_vw, std::size_t deg_v,
                   std::size_t deg_w, int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw InputError("alpha indices must be 0 or 1");
  const auto lv = static_cast<std::int64_t>(lambda_v);
  const auto lw = static_cast<std::int64_t>(lambda_w);
  const auto lvw = static_cast<std::int64_t>(lambda_vw);
  const std::int64_t bmax = lv - lvw - j;
  const std::int64_t cmax = lw - lvw - j;
  if (bmax < 0 || cmax < 0) throw InputError("alpha: inconsistent neighborhood counts");

  // Constraints, doubled to stay integral:
  //   2(a + b) >= 2 lambda_v - deg(v) - 2ij
  //   2(i lambda_vw + (-1)^i a + c) >= 2 lambda_w - deg(w) - 2ij
  // For fixed a they separate into independent tail sums over b and c.
  const std::int64_t tv = 2 * lv - static_cast<std::int64_t>(deg_v) - 2 * i * j;
  const std::int64_t tw = 2 * lw - static_cast<std::int64_t>(deg_w) - 2 * i * j;
  const auto btail = binomial_tails(static_cast<std::size_t>(bmax));
  const auto ctail = binomial_tails(static_cast<std::size_t>(cmax));

  BigInt total = 0;
  for (std::int64_t a = 0; a <= lvw; ++a) {
    const std::int64_t wa = i ? lvw - a : a;
    const BigInt& sb = tail_at(btail, ceil_half(tv) - a);
    const BigInt& sc = tail_at(ctail, ceil_half(tw) - wa);
    if (sb == 0 || sc == 0) continue;
    total += binomial(lvw, a) * sb * sc;
  }
  return Rational(total, pow2(static_cast<unsigned>(lvw + bmax + cmax)));
}

Rational alpha(const Graph& g, const NeighborhoodStats& stats, Vertex v, Vertex w, int i, int j) {
  auto in_vpp = [&](Vertex x) {
    return std::binary_search(stats.v_double_prime.begin(), stats.v_double_prime.end(), x);
  };
  if (v == w) throw InputError("alpha needs distinct vertices");
  if (!in_vpp(v) || !in_vpp(w)) throw InputError("alpha is defined for vertices of V'' only");
  if (g.adjacent(v, w) != (j == 1)) throw InputError("alpha: j does not match adjacency");
  return alpha_sum(stats.lambda[v], stats.lambda[w], mutual_degree(g, v, w), g.degree(v), g.degree(w), i, j);
}

Rational integration_probability(std::size_t lambda, std::size_t degree) {
  const std::int64_t lo = ceil_half(2 * static_cast<std::int64_t>(lambda) - static_cast<std::int64_t>(degree));
  const auto tails = binomial_tails(lambda);
  return Rational(tail_at(tails, lo), pow2(static_cast<unsigned>(lambda)));
}

namespace {

std::optional<std::string> k2_component(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    if (g.degree(a) == 1 && g.degree(b) == 1) {
      return "component {" + std::to_string(a) + "," + std::to_string(b) +
             "} is a single edge (K2): pendant forcing is circular; it contributes a factor 2";
    }
  }
  return std::nullopt;
}

Rational cantelli(const Rational& sigma_sq, const Rational& gap, const BigInt& scale) {
  const Rational denom = sigma_sq + gap * gap;
  if (denom == 0) return Rational(scale);
  return sigma_sq / denom * Rational(scale);
}

// Sum over unordered pairs of `vertices` of alpha_{0,j} + alpha_{1,j}.
Rational pair_sum(const Graph& g, const NeighborhoodStats& stats, const std::vector<Vertex>& vertices) {
  Rational s = 0;
  for (std::size_t x = 0; x < vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < vertices.size(); ++y) {
      const Vertex v = vertices[x], w = vertices[y];
      const int j = g.adjacent(v, w) ? 1 : 0;
      s += alpha(g, stats, v, w, 0, j) + alpha(g, stats, v, w, 1, j);
    }
  }
  return s;
}

BoundReport inapplicable(BoundVariant v, std::string reason) {
  BoundReport r;
  r.variant = v;
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

// R^chi(r): 1 + C(r, r/2) 2^-r for even r, 1 for odd r.
Rational r_factor(std::size_t r) {
  if (r % 2) return 1;
  return 1 + Rational(binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(r / 2)),
                      pow2(static_cast<unsigned>(r)));
}

}  // namespace

BoundReport bound_general(const Graph& g) {
  if (g.max_degree() < 2) return inapplicable(BoundVariant::General, "maximum degree below 2");
  if (auto k2 = k2_component(g)) return inapplicable(BoundVariant::General, *k2);

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  const Graph core = g.induced(keep);
  const NeighborhoodStats stats = neighborhood_stats(core);

  BoundReport r;
  r.variant = BoundVariant::General;
  r.applicable = true;
  r.isolated_stripped = g.vertex_count() - keep.size();
  r.v_prime_size = stats.v_prime.size() + r.isolated_stripped;
  r.v_double_prime_size = stats.v_double_prime.size();
  const BigInt scale = pow2(static_cast<unsigned>(r.v_prime_size));

  if (stats.v_double_prime.empty()) {
    r.mu = 0;
    r.sigma_sq = 0;
    r.upper_bound = Rational(scale);
    r.exact = true;
    return r;
  }
  for (Vertex v : stats.v_double_prime) r.mu += integration_probability(stats.lambda[v], core.degree(v));
  r.sigma_sq = r.mu + pair_sum(core, stats, stats.v_double_prime) - r.mu * r.mu;
  r.upper_bound = cantelli(r.sigma_sq, Rational(r.v_double_prime_size) - r.mu, scale);
  return r;
}

BoundReport bound_specialized(const Graph& g, BoundVariant variant) {
  if (variant == BoundVariant::General) return bound_general(g);
  const std::size_t n = g.vertex_count();
  if (n == 0) return inapplicable(variant, "empty graph");

  BoundReport r;
  r.variant = variant;
  r.v_prime_size = n;
  r.v_double_prime_size = n;
  const BigInt scale = pow2(static_cast<unsigned>(n));
  const Rational nn(static_cast<long long>(n));

  if (variant == BoundVariant::MinDegree) {
    if (g.min_degree() < 2) return inapplicable(variant, "minimum degree below 2");
    Rational mu_even = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t d = g.degree(v);
      if (d % 2 == 0) {
        mu_even += Rational(binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(d / 2)),
                            pow2(static_cast<unsigned>(d + 1)));
      }
    }
    const NeighborhoodStats stats = neighborhood_stats(g);
    r.applicable = true;
    r.mu = nn / 2 + mu_even;
    r.sigma_sq = r.mu + pair_sum(g, stats, stats.v_prime) - r.mu * r.mu;
    const Rational gap = nn - 2 * mu_even;  // 2(|V| - mu)
    r.upper_bound = cantelli(4 * r.sigma_sq, gap, scale);
    return r;
  }

  // Regular and strongly regular.
  const std::size_t deg = g.degree(0);
  if (g.min_degree() != g.max_degree()) return inapplicable(variant, "graph is not regular");
  if (deg < 2) return inapplicable(variant, "valency below 2");
  const Rational big_r = r_factor(deg);
  r.applicable = true;
  r.mu = big_r * nn / 2;
  const Rational gap = (2 - big_r) * nn;  // 2(|V| - mu)

  Rational pairs = 0;
  if (variant == BoundVariant::Regular) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        const int j = g.adjacent(v, w) ? 1 : 0;
        const std::size_t common = mutual_degree(g, v, w);
        pairs += alpha_sum(deg, deg, common, deg, deg, 0, j) + alpha_sum(deg, deg, common, deg, deg, 1, j);
      }
    }
  } else {
    const auto srg = detect_srg(g);
    if (!srg) return inapplicable(variant, "graph is not strongly regular");
    const Rational adjacent_pairs = Rational(static_cast<long long>(n * deg)) / 2;
    const Rational other_pairs = Rational(static_cast<long long>(n * (n - deg - 1))) / 2;
    const Rational alpha_adj = alpha_sum(deg, deg, srg->lambda_adj, deg, deg, 0, 1) +
                               alpha_sum(deg, deg, srg->lambda_adj, deg, deg, 1, 1);
    Rational alpha_non = 0;
    if (n > deg + 1) {
      alpha_non = alpha_sum(deg, deg, srg->lambda_nonadj, deg, deg, 0, 0) +
                  alpha_sum(deg, deg, srg->lambda_nonadj, deg, deg, 1, 0);
    }
    pairs = adjacent_pairs * alpha_adj + other_pairs * alpha_non;
  }
  r.sigma_sq = r.mu + pairs - r.mu * r.mu;
  r.upper_bound = cantelli(4 * r.sigma_sq, gap, scale);
  return r;
}

AutoBound bound_auto(const Graph& g) {
  AutoBound out{{}, bound_general(g)};
  for (BoundVariant v : {BoundVariant::Srg, BoundVariant::Regular, BoundVariant::MinDegree}) {
    BoundReport r = bound_specialized(g, v);
    if (r.applicable) {
      out.selected = std::move(r);
      return out;
    }
  }
  out.selected = out.general;
  return out;
}

SemirandomMoments semirandom_oracle(const Graph& g, bool pair_probabilities, std::size_t cap) {
  if (auto k2 = k2_component(g)) throw Inapplicable(*k2);
  const NeighborhoodStats stats = neighborhood_stats(g);
  const std::size_t m = stats.v_prime.size();
  if (m > std::min<std::size_t>(cap, 31)) {
    throw CapExceeded("semi-random oracle: |V'| = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  }

  // Pendants always end up opposite their neighbor, so vertex v of V' sees
  // deg(v) - lambda_v guaranteed opposite neighbors and needs
  // 2 * (opposite among V' neighbors) >= 2 lambda_v - deg(v).
  const Graph core = g.induced(stats.v_prime);
  const auto adj = core.neighbor_masks();
  std::vector<std::int32_t> thr(m);
  std::uint32_t vpp_mask = 0;
  std::vector<std::size_t> vpp_local;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex v = stats.v_prime[i];
    thr[i] = 2 * static_cast<std::int32_t>(stats.lambda[v]) - static_cast<std::int32_t>(g.degree(v));
    if (thr[i] > 0) {
      vpp_mask |= 1u << i;
      vpp_local.push_back(i);
    }
  }

  const std::size_t q = vpp_local.size();
  std::uint64_t integrated = 0, sum_x = 0, sum_x2 = 0;
  std::vector<std::uint64_t> joint_counts(pair_probabilities ? q * q : 0, 0);
  kernels::SweepProblem p{adj, thr};
  kernels::sweep_all(p, static_cast<unsigned>(m), [&](std::uint32_t, std::span<const std::uint32_t> fail,
                                                     std::span<const std::uint32_t>) {
    for (std::uint32_t f : fail) {
      const std::uint64_t x = q - static_cast<std::uint64_t>(std::popcount(f & vpp_mask));
      integrated += f == 0;
      sum_x += x;
      sum_x2 += x * x;
      if (pair_probabilities) {
        for (std::size_t a = 0; a < q; ++a) {
          if ((f >> vpp_local[a]) & 1u) continue;
          for (std::size_t b = 0; b < q; ++b) joint_counts[a * q + b] += !((f >> vpp_local[b]) & 1u);
        }
      }
    }
  });

  SemirandomMoments out;
  out.v_prime_size = m;
  const BigInt total = pow2(static_cast<unsigned>(m));
  out.integrated = integrated;
  out.prob_integrated = Rational(BigInt(integrated), total);
  out.ex = Rational(BigInt(sum_x), total);
  out.ex2 = Rational(BigInt(sum_x2), total);
  out.v_double_prime = stats.v_double_prime;
  if (pair_probabilities) {
    out.joint.assign(q, std::vector<Rational>(q));
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) out.joint[a][b] = Rational(BigInt(joint_counts[a * q + b]), total);
  }
  return out;
}

ExtremalBounds extremal_bounds(const Graph& g) {
  const auto e = static_cast<std::int64_t>(g.edge_count());
  const auto v = static_cast<std::int64_t>(g.vertex_count());
  ExtremalBounds b;
  b.ims_lower = Rational(e, 2);

  // ceil((4E - 1 + sqrt(8E + 1)) / 8) without floating point: smallest m
  // with 8m - 4E + 1 >= 0 and (8m - 4E + 1)^2 >= 8E + 1.
  const std::int64_t disc = 8 * e + 1;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
  while (root * root > disc) --root;
  std::int64_t m = (4 * e - 1 + root) / 8 - 1;
  for (;; ++m) {
    const std::int64_t lhs = 8 * m - 4 * e + 1;
    if (lhs >= 0 && lhs * lhs >= disc) break;
  }
  b.edwards = m;

  if (v > 0 && g.connected()) b.edwards_erdos = Rational(e, 2) + Rational(v - 1, 4);
  return b;
}

}  // namespace mixspec
