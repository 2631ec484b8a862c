// mixspec: integrated colorings (unfriendly partitions) of small graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input or
// flags, 3 command not applicable to the graph (including cap refusals).

#include "mixspec/bounds.hpp"
#include "mixspec/edge_list.hpp"
#include "mixspec/enumerator.hpp"
#include "mixspec/errors.hpp"
#include "mixspec/families.hpp"
#include "mixspec/generators.hpp"
#include "mixspec/genfunc.hpp"
#include "mixspec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace mixspec;

namespace {

struct Options {
  std::string input;
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  std::uint64_t start = 0;
  std::optional<std::size_t> cap;
  std::string variant = "auto";
  std::size_t max_n = 12;
  bool asymptotic = false;
  bool extended = false;
};

json rational_json(const Rational& q) {
  return json{{"num", boost::multiprecision::numerator(q).str()},
              {"den", boost::multiprecision::denominator(q).str()}};
}

std::size_t effective_cap(const Options& o) { return o.cap ? std::min(*o.cap, kHardCap) : enumeration_cap(); }

std::size_t require_n(const Options& o) {
  if (!o.n) throw InputError("--n is required with --family " + o.family);
  return *o.n;
}

Family parse_family(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  throw Inapplicable("this command supports --family path or cycle, not '" + name + "'");
}

Graph family_graph(const Options& o) {
  const std::string& f = o.family;
  if (f == "petersen") return gen::petersen();
  const std::size_t n = require_n(o);
  if (f == "path") {
    if (n < 1) throw InputError("path needs --n >= 1");
    return gen::path(n);
  }
  if (f == "cycle") {
    if (n == 2) throw Inapplicable("C2 is a multigraph (doubled edge) and has no simple-graph form");
    if (n < 2) throw InputError("cycle needs --n >= 2");
    return gen::cycle(n);
  }
  if (f == "complete") return gen::complete(n);
  if (f == "biclique") {
    if (!o.m) throw InputError("--m is required with --family biclique");
    return gen::biclique(*o.m, n);
  }
  throw InputError("unknown family '" + f + "'");
}

Graph load_graph(const Options& o) {
  const bool has_input = !o.input.empty();
  const bool has_family = !o.family.empty();
  if (has_input == has_family) throw InputError("give exactly one of --input or --family");
  if (has_family) return family_graph(o);
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_edge_list(text);
}

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
}

int cmd_gen(const Options& o) {
  std::cout << format_edge_list(load_graph(o));
  return 0;
}

int cmd_enumerate(const Options& o) {
  check_format(o);
  const Graph g = load_graph(o);
  if (o.format == "csv") std::cout << "coloring\n";
  for_each_integrated(g, [&](const Coloring& c) {
    if (o.format == "csv") {
      std::cout << c.to_string() << '\n';
    } else {
      std::cout << json(c.to_string()).dump() << '\n';
    }
  }, effective_cap(o));
  return 0;
}

int cmd_spectrum(const Options& o) {
  check_format(o);
  const Graph g = load_graph(o);
  const MixHistogram h = mix_histogram(g, effective_cap(o));
  if (o.format == "csv") {
    std::cout << "mix,count\n";
    for (auto [mix, count] : h.counts) std::cout << mix << ',' << count << '\n';
    return 0;
  }
  json out;
  out["ic"] = h.ic;
  out["ims"] = h.ims();
  json hist = json::object();
  for (auto [mix, count] : h.counts) hist[std::to_string(mix)] = count;
  out["histogram"] = hist;
  if (o.extended) {
    const auto eb = extremal_bounds(g);
    out["max_cut"] = max_cut(g, effective_cap(o));
    out["ims_lower_bound"] = rational_json(eb.ims_lower);
    out["edwards"] = eb.edwards.str();
    out["edwards_erdos"] = eb.edwards_erdos ? rational_json(*eb.edwards_erdos) : json(nullptr);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

struct PmfRows {
  std::string family;
  std::optional<std::size_t> m;
  std::size_t n = 0;
  BigInt ic;
  std::map<std::size_t, BigInt> counts;
};

PmfRows family_pmf(const Options& o) {
  PmfRows rows;
  rows.family = o.family;
  if (o.family == "path" || o.family == "cycle") {
    rows.n = require_n(o);
    const FamilyPmf pmf = o.family == "path" ? path_pmf(rows.n) : cycle_pmf(rows.n);
    rows.ic = pmf.ic;
    rows.counts = pmf.counts;
  } else if (o.family == "complete") {
    rows.n = require_n(o);
    const auto c = ic_complete(rows.n);
    rows.ic = c.ic;
    rows.counts[c.fixed_mix] = c.ic;
  } else if (o.family == "biclique") {
    rows.n = require_n(o);
    if (!o.m) throw InputError("--m is required with --family biclique");
    rows.m = o.m;
    const auto b = ic_biclique(*o.m, rows.n);
    rows.ic = b.ic;
    rows.counts = b.spectrum;
  } else if (o.family.empty()) {
    throw InputError("pmf needs --family");
  } else {
    throw Inapplicable("no closed-form pmf for family '" + o.family + "'");
  }
  return rows;
}

int cmd_pmf(const Options& o) {
  check_format(o);
  const PmfRows rows = family_pmf(o);
  if (o.format == "csv") {
    std::cout << "mix,num,den\n";
    for (const auto& [mix, count] : rows.counts) std::cout << mix << ',' << count << ',' << rows.ic << '\n';
    return 0;
  }
  json out;
  out["family"] = rows.family;
  if (rows.m) out["m"] = *rows.m;
  out["n"] = rows.n;
  out["ic"] = rows.ic.str();
  json entries = json::array();
  for (const auto& [mix, count] : rows.counts) {
    entries.push_back(json{{"mix", mix}, {"num", count.str()}, {"den", rows.ic.str()}});
  }
  out["pmf"] = entries;
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_sample(const Options& o) {
  if (!o.seed) throw InputError("sample requires --seed");
  const Family f = parse_family(o.family);
  const std::size_t n = require_n(o);
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t index = o.start + i;
    const Coloring c = f == Family::Path ? sample_path_at(n, *o.seed, index) : sample_cycle_at(n, *o.seed, index);
    std::cout << json(c.to_string()).dump() << '\n';
  }
  return 0;
}

int cmd_gf(const Options& o) {
  check_format(o);
  const Family f = parse_family(o.family);
  const std::size_t n = require_n(o);
  const UPoly p = family_gf_coeff(f, n);
  if (o.format == "csv") {
    std::cout << "power,coeff\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) std::cout << k << ',' << p.coeffs()[k] << '\n';
    return 0;
  }
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  json out;
  out["family"] = std::string(family_name(f));
  out["n"] = n;
  out["coeffs"] = coeffs;
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_moments(const Options& o) {
  if (o.asymptotic) {
    const auto c = asymptotic_model_check();
    json out;
    out["step"] = c.step;
    out["B(1)"] = c.b_at_one;
    out["A(1)"] = c.a_at_one;
    out["B'(1)"] = c.b_prime;
    out["B'(1)_expected"] = c.b_prime_expected;
    out["B''(1)"] = c.b_second;
    out["B''(1)_expected"] = c.b_second_expected;
    out["variability"] = c.variability;
    out["variability_expected"] = c.variability_expected;
    out["checks"] = json{{"unit_values", c.unit_values_ok},
                         {"B'(1)", c.b_prime_ok},
                         {"B''(1)", c.b_second_ok},
                         {"variability", c.variability_ok}};
    std::cout << out.dump() << '\n';
    return 0;
  }
  if (!o.input.empty()) {
    const MixHistogram h = mix_histogram(load_graph(o), effective_cap(o));
    std::vector<BigInt> coeffs(h.counts.empty() ? 0 : h.ims_max() + 1, 0);
    for (auto [mix, count] : h.counts) coeffs[mix] = count;
    const Moments m = pgf_moments(UPoly(std::move(coeffs)));
    json out;
    out["ic"] = h.ic;
    out["mean"] = rational_json(m.mean);
    out["variance"] = rational_json(m.variance);
    std::cout << out.dump() << '\n';
    return 0;
  }
  const Family f = parse_family(o.family);
  const std::size_t n = require_n(o);
  json out;
  out["family"] = std::string(family_name(f));
  out["n"] = n;
  if (n >= 8) {
    const CltReport r = clt_diagnostics(f, n);
    out["mean"] = rational_json(r.moments.mean);
    out["variance"] = rational_json(r.moments.variance);
    out["delta_mean"] = to_double(r.delta_mean);
    out["delta_var"] = to_double(r.delta_var);
    out["delta_mean_error"] = r.delta_mean_error;
    out["delta_var_error"] = r.delta_var_error;
    out["mean_offset"] = r.mean_offset;
    out["cdf_sup_distance"] = r.cdf_sup_distance;
  } else {
    const Moments m = pgf_moments(family_gf_coeff(f, n));
    out["mean"] = rational_json(m.mean);
    out["variance"] = rational_json(m.variance);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

json bound_json(const BoundReport& r) {
  json out;
  out["variant"] = std::string(variant_name(r.variant));
  out["applicable"] = r.applicable;
  if (!r.applicable) {
    out["reason"] = r.reason;
    return out;
  }
  out["v_prime_size"] = r.v_prime_size;
  out["v_double_prime_size"] = r.v_double_prime_size;
  out["isolated_stripped"] = r.isolated_stripped;
  out["mu"] = rational_json(r.mu);
  out["sigma_sq"] = rational_json(r.sigma_sq);
  out["upper_bound"] = rational_json(r.upper_bound);
  out["upper_bound_decimal"] = to_double(r.upper_bound);
  out["exact"] = r.exact;
  out["exact_ic"] = r.exact_ic ? json(r.exact_ic->str()) : json(nullptr);
  return out;
}

int cmd_bound(const Options& o) {
  const Graph g = load_graph(o);
  std::optional<BigInt> ic;
  if (g.vertex_count() <= effective_cap(o)) ic = BigInt(mix_histogram(g, effective_cap(o)).ic);
  auto attach = [&](BoundReport r) {
    if (r.applicable) r.exact_ic = ic;
    return r;
  };
  if (o.variant == "auto") {
    AutoBound a = bound_auto(g);
    json out;
    out["selected"] = bound_json(attach(a.selected));
    out["general"] = bound_json(attach(a.general));
    std::cout << out.dump() << '\n';
    return a.selected.applicable ? 0 : 3;
  }
  const BoundReport r = attach(bound_specialized(g, parse_variant(o.variant)));
  std::cout << bound_json(r).dump() << '\n';
  if (!r.applicable) std::cerr << "mixspec: not applicable: " << r.reason << '\n';
  return r.applicable ? 0 : 3;
}

int cmd_verify(const Options& o) {
  const VerifyReport report = run_verify(o.max_n);
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(json{{"check", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    }
    json out;
    out["max_n"] = o.max_n;
    out["checks"] = checks;
    out["notes"] = report.notes;
    out["status"] = report.all_pass() ? "pass" : "fail";
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "check,status,detail\n";
    for (const auto& c : report.checks) {
      std::cout << '"' << c.name << "\"," << (c.pass ? "pass" : "fail") << ",\"" << c.detail << "\"\n";
    }
    for (const auto& note : report.notes) std::cout << "\"note\",info,\"" << note << "\"\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrated colorings of finite simple graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_source = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "edge-list file, or - for stdin");
    sub->add_option("--family", o.family, "path | cycle | complete | biclique | petersen");
    sub->add_option("--n", o.n, "order (for biclique: second part size)");
    sub->add_option("--m", o.m, "biclique first part size");
    sub->add_option("--cap", o.cap, "enumeration cap (default MIXSPEC_CAP or 24)");
  };
  auto format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "json | csv"); };

  auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
  graph_source(gen);
  auto* enumerate = app.add_subcommand("enumerate", "list every integrated coloring");
  graph_source(enumerate);
  format(enumerate);
  auto* spectrum = app.add_subcommand("spectrum", "mixing-number histogram of integrated colorings");
  graph_source(spectrum);
  format(spectrum);
  spectrum->add_flag("--extended", o.extended, "add max-cut and extremal lower bounds");
  auto* pmf = app.add_subcommand("pmf", "exact mixing-number law for a family");
  graph_source(pmf);
  format(pmf);
  auto* sample = app.add_subcommand("sample", "uniform integrated colorings of a path or cycle");
  graph_source(sample);
  sample->add_option("--seed", o.seed, "64-bit seed")->required();
  sample->add_option("--count", o.count, "number of samples");
  sample->add_option("--start", o.start, "index of the first sample (for sharding)");
  auto* gf = app.add_subcommand("gf", "bivariate generating function coefficient [z^n]");
  graph_source(gf);
  format(gf);
  auto* moments = app.add_subcommand("moments", "exact moments and normal-approximation diagnostics");
  graph_source(moments);
  moments->add_flag("--asymptotic", o.asymptotic, "finite-difference check of the asymptotic model");
  auto* bound = app.add_subcommand("bound", "second-moment upper bound on the number of integrated colorings");
  graph_source(bound);
  bound->add_option("--variant", o.variant, "general | min-degree | regular | srg | auto");
  auto* verify = app.add_subcommand("verify", "run the cross-check suite");
  verify->add_option("--max-n", o.max_n, "largest order to cross-check");
  verify->add_option("--format", o.format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*pmf) return cmd_pmf(o);
    if (*sample) return cmd_sample(o);
    if (*gf) return cmd_gf(o);
    if (*moments) return cmd_moments(o);
    if (*bound) return cmd_bound(o);
    if (*verify) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "mixspec: " << e.what() << '\n';
    return 2;
  } catch (const Inapplicable& e) {
    std::cerr << "mixspec: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
