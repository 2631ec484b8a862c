// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "mixspec/bounds.hpp"
#include "mixspec/enumerator.hpp"
#include "mixspec/families.hpp"
#include "mixspec/generators.hpp"
#include "mixspec/genfunc.hpp"
#include "mixspec/rng.hpp"
#include "mixspec/verify.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mixspec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

std::map<std::size_t, Rational> normalized(const MixHistogram& h) {
  std::map<std::size_t, Rational> out;
  for (auto [k, c] : h.counts) out[k] = Rational(BigInt(c), BigInt(h.ic));
  return out;
}

std::set<std::string> strings(const std::vector<Coloring>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.to_string());
  return out;
}

std::vector<BigInt> pmf_numerators(const FamilyPmf& f) {
  std::vector<BigInt> v;
  for (const auto& [k, c] : f.counts) {
    if (v.size() <= k) v.resize(k + 1, 0);
    v[k] = c;
  }
  return v;
}

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> c = standard_corpus(16, 100);
  return c;
}

void complete_graphs(Outcome& o) {
  for (std::size_t r = 1; r <= 9; ++r) {
    const Graph g = gen::complete(r);
    const auto f = ic_complete(r);
    const auto cs = enumerate_integrated(g);
    o.require(BigInt(cs.size()) == f.ic, "ic(K" + std::to_string(r) + ")");
    for (const auto& c : cs)
      if (mix_of_coloring(g, c) != f.fixed_mix) {
        o.require(false, "mix on K" + std::to_string(r));
        break;
      }
  }
  o.require(ic_complete(4).ic == 6 && ic_complete(5).ic == 20, "K4/K5 values");
}

void bicliques(Outcome& o) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto h = mix_histogram(gen::biclique(m, n));
      const auto f = ic_biclique(m, n);
      std::map<std::size_t, BigInt> spectrum;
      for (auto [k, c] : h.counts) spectrum[k] = c;
      const std::string tag = "K" + std::to_string(m) + "," + std::to_string(n);
      o.require(BigInt(h.ic) == f.ic, "ic " + tag);
      o.require(spectrum == f.spectrum, "spectrum " + tag);
      if (m % 2 == 0 && n % 2 == 0) {
        const std::map<std::size_t, BigInt> want{{m * n / 2, binomial(m, m / 2) * binomial(n, n / 2)}, {m * n, 2}};
        o.require(spectrum == want, "even/even " + tag);
      }
    }
}

void paths(Outcome& o) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto h = mix_histogram(gen::path(n));
    o.require(BigInt(h.ic) == ic_path(n), "ic(P" + std::to_string(n) + ")");
    if (n >= 2) o.require(normalized(h) == path_pmf(n).masses(), "pmf(P" + std::to_string(n) + ")");
  }
  for (std::int64_t n = 2; n <= 64; ++n) {
    BigInt sum = 0;
    for (std::int64_t k = n / 2; k <= n - 1; ++k) sum += 2 * binomial(k - 1, n - k - 1);
    o.require(sum == ic_path(static_cast<std::size_t>(n)), "mass identity n=" + std::to_string(n));
  }
}

void cycles(Outcome& o) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto h = mix_histogram(gen::cycle(n));
    const std::string tag = "C" + std::to_string(n);
    o.require(BigInt(h.ic) == ic_cycle(n), "ic " + tag);
    o.require(BigInt(necklace_enumerate(n, kDefaultCap).size()) == ic_cycle(n), "necklaces " + tag);
    o.require(normalized(h) == cycle_pmf(n).masses(), "pmf " + tag);
  }
  for (std::size_t n = 2; n <= 64; ++n)
    o.require(ic_cycle(n) == ic_cycle_lucas(n), "Lucas form n=" + std::to_string(n));
}

void generating_functions(Outcome& o) {
  const auto p = path_gf_coeffs(256);
  const auto c = cycle_gf_coeffs(256);
  for (std::size_t n = 2; n <= 256; ++n) {
    o.require(p[n].at_one() == ic_path(n), "path gf(1) n=" + std::to_string(n));
    o.require(c[n].at_one() == ic_cycle(n), "cycle gf(1) n=" + std::to_string(n));
    if (n <= 64) {
      o.require(p[n].coeffs() == pmf_numerators(path_pmf(n)), "path coeffs n=" + std::to_string(n));
      o.require(c[n].coeffs() == pmf_numerators(cycle_pmf(n)), "cycle coeffs n=" + std::to_string(n));
    }
  }
}

void clt_constants(Outcome& o) {
  char buf[160];
  for (Family f : {Family::Path, Family::Cycle}) {
    const auto r = clt_diagnostics(f, 200);
    const std::string name(family_name(f));
    std::snprintf(buf, sizeof buf, "%s mean increment %.9f vs %.9f", name.c_str(), to_double(r.delta_mean),
                  clt_mean_constant());
    o.require(r.delta_mean_error <= 1e-6, buf);
    std::snprintf(buf, sizeof buf, "%s variance increment %.9f vs %.9f", name.c_str(), to_double(r.delta_var),
                  clt_variance_constant());
    o.require(r.delta_var_error <= 1e-6, buf);
    double prev = 1;
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
      const double d = cdf_sup_distance(family_gf_coeff(f, n));
      std::snprintf(buf, sizeof buf, "%s sup distance not decreasing at n=%zu (%.6f)", name.c_str(), n, d);
      o.require(d < prev, buf);
      prev = d;
    }
  }
  const auto a = asymptotic_model_check();
  std::snprintf(buf, sizeof buf, "B'(1) %.9f vs %.9f", a.b_prime, a.b_prime_expected);
  o.require(a.b_prime_ok, buf);
  std::snprintf(buf, sizeof buf, "v(B) %.9f vs %.9f", a.variability, a.variability_expected);
  o.require(a.variability_ok, buf);
}

void samplers(Outcome& o) {
  constexpr std::size_t kSamples = 100000;
  auto check = [&](const std::string& tag, const Graph& g, const std::vector<Coloring>& samples) {
    const auto ic = strings(enumerate_integrated(g));
    std::map<std::string, std::size_t> freq;
    for (const auto& c : samples) ++freq[c.to_string()];
    std::set<std::string> support;
    for (const auto& [s, f] : freq) support.insert(s);
    o.require(support == ic, "support " + tag);
    if (ic.size() < 2) return;
    const double expected = static_cast<double>(kSamples) / static_cast<double>(ic.size());
    double chi = 0;
    for (const auto& s : ic) {
      const double d = static_cast<double>(freq[s]) - expected;
      chi += d * d / expected;
    }
    const double pvalue = boost::math::gamma_q((static_cast<double>(ic.size()) - 1) / 2, chi / 2);
    char buf[96];
    std::snprintf(buf, sizeof buf, "chi-square %s p=%.2e", tag.c_str(), pvalue);
    o.require(pvalue > 1e-3, buf);
  };
  for (std::size_t n = 2; n <= 8; ++n)
    check("P" + std::to_string(n), gen::path(n), sample_path(n, 1000 + n, kSamples));
  for (std::size_t n = 3; n <= 8; ++n)
    check("C" + std::to_string(n), gen::cycle(n), sample_cycle(n, 2000 + n, kSamples));
}

void bounds(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& [name, g] : corpus()) {
    const auto r = bound_general(g);
    if (!r.applicable) continue;
    ++checked;
    const BigInt ic(mix_histogram(g).ic);
    o.require(mixspec::ceil(r.upper_bound) >= ic, "unsound on " + name);
    const auto m = semirandom_oracle(g);
    o.require(r.mu == m.ex, "mu on " + name);
    o.require(r.sigma_sq == m.ex2 - m.ex * m.ex, "sigma^2 on " + name);
    for (BoundVariant v : {BoundVariant::Regular, BoundVariant::Srg, BoundVariant::MinDegree}) {
      const auto s = bound_specialized(g, v);
      if (s.applicable)
        o.require(s.upper_bound == r.upper_bound, std::string(variant_name(v)) + " differs on " + name);
    }
  }
  const auto c4 = bound_general(gen::cycle(4));
  o.require(c4.mu == 3 && c4.sigma_sq == Rational(3, 2) && c4.upper_bound == Rational(48, 5), "C4 instance");
  o.require(checked > 100, "corpus too small");
}

void extremal(Outcome& o) {
  for (const auto& [name, g] : corpus()) {
    const auto h = mix_histogram(g);
    const auto e = extremal_bounds(g);
    o.require(2 * h.ims_min() >= g.edge_count(), "half-edge bound on " + name);
    o.require(BigInt(h.ims_max()) >= e.edwards, "Edwards on " + name);
    if (e.edwards_erdos) o.require(Rational(h.ims_max()) >= *e.edwards_erdos, "Edwards-Erdos on " + name);
    bool all = true;
    for_each_max_cut(g, [&](std::uint32_t mask) {
      all = all && is_integrated(g, Coloring::from_mask(mask, g.vertex_count())).integrated;
    });
    o.require(all, "max-cut coloring not integrated on " + name);
  }
}

void local_search(Outcome& o) {
  const auto& graphs = corpus();
  SplitMix64 rng(31337);
  for (std::size_t run = 0; run < 1000; ++run) {
    const auto& [name, g] = graphs[run % graphs.size()];
    Coloring start(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.next() & 1u) start.flip(v);
    const auto r = propp_local_search(g, start);
    o.require(r.flips <= g.edge_count(), "too many flips on " + name);
    o.require(is_integrated(g, r.coloring).integrated, "not integrated on " + name);
    for (std::size_t i = 1; i < r.mix_trace.size(); ++i)
      if (r.mix_trace[i] <= r.mix_trace[i - 1]) {
        o.require(false, "mix did not increase on " + name);
        break;
      }
    if (!o.pass) break;
  }
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"complete graphs", 1, complete_graphs},
      {"bicliques", 1, bicliques},
      {"paths", 10, paths},
      {"cycles", 10, cycles},
      {"generating functions", 5, generating_functions},
      {"CLT constants", 30, clt_constants},
      {"samplers", 30, samplers},
      {"bounds soundness and moments", 60, bounds},
      {"extremal inequalities", 30, extremal},
      {"Propp local search", 10, local_search},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs > %.0fs", secs, c.limit_seconds);
    o.require(secs <= c.limit_seconds, buf);
    failures += !o.pass;
    std::printf("criterion %2zu %s  %-30s %7.3fs%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", c.name, secs,
                o.pass ? "" : "  ", o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
