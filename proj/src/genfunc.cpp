#include "mixspec/genfunc.hpp"

#include "mixspec/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mixspec {

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(BigInt c, std::size_t k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

double UPoly::eval(double u) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->convert_to<double>();
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(std::move(v));
}

std::vector<UPoly> path_gf_coeffs(std::size_t n) {
  // f_m = u f_{m-1} + u f_{m-2} + [z^m](2z - 2uz^3), f_0 = 0.
  std::vector<UPoly> f(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly next = f[m - 1].shifted(1);
    if (m >= 2) next += f[m - 2].shifted(1);
    if (m == 1) next += UPoly::monomial(2, 0);
    if (m == 3) next -= UPoly::monomial(2, 1);
    f[m] = std::move(next);
  }
  return f;
}

std::vector<UPoly> cycle_gf_coeffs(std::size_t n) {
  // g_m = u^2 (g_{m-2} + 2 g_{m-3} + g_{m-4}) + [z^m](2u^2z^2 + 6u^2z^3 + 4u^2z^4).
  std::vector<UPoly> g(n + 1);
  for (std::size_t m = 2; m <= n; ++m) {
    UPoly acc = g[m - 2];
    if (m >= 3) {
      UPoly twice = g[m - 3];
      twice *= 2;
      acc += twice;
    }
    if (m >= 4) acc += g[m - 4];
    UPoly next = acc.shifted(2);
    if (m == 2) next += UPoly::monomial(2, 2);
    if (m == 3) next += UPoly::monomial(6, 2);
    if (m == 4) next += UPoly::monomial(4, 2);
    g[m] = std::move(next);
  }
  return g;
}

UPoly path_gf_coeff(std::size_t n) {
  if (n < 1) throw InputError("path generating function needs n >= 1");
  return path_gf_coeffs(n)[n];
}

UPoly cycle_gf_coeff(std::size_t n) {
  if (n < 2) throw InputError("cycle generating function needs n >= 2");
  return cycle_gf_coeffs(n)[n];
}

UPoly family_gf_coeff(Family f, std::size_t n) {
  return f == Family::Path ? path_gf_coeff(n) : cycle_gf_coeff(n);
}

Moments pgf_moments(const UPoly& p) {
  if (p.is_zero()) throw InputError("moments of the zero polynomial");
  BigInt s0 = 0, s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const BigInt& c = p.coeffs()[k];
    if (c < 0) throw InputError("pgf has a negative coefficient");
    s0 += c;
    s1 += c * k;
    s2 += c * k * k;
  }
  Rational mean(s1, s0);
  Rational second(s2, s0);
  return {mean, second - mean * mean};
}

double clt_mean_constant() { return std::sqrt(5.0) / 10.0 + 0.5; }

double clt_variance_constant() { return 39.0 * std::sqrt(5.0) / 250.0 + 63.0 / 250.0; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

struct Standardized {
  std::vector<double> points;  // standardized support, ascending
  std::vector<double> cdf;     // P[X <= points[i]]
};

Standardized standardize(const UPoly& p) {
  const Moments m = pgf_moments(p);
  const double mean = to_double(m.mean);
  const double sd = std::sqrt(to_double(m.variance));
  const BigInt total = p.at_one();
  Standardized s;
  BigInt running = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    running += p.coeffs()[k];
    s.points.push_back(sd > 0 ? (static_cast<double>(k) - mean) / sd : 0.0);
    s.cdf.push_back(to_double(Rational(running, total)));
  }
  return s;
}

// P[X <= x] and P[X < x] for a standardized step law.
std::pair<double, double> evaluate(const Standardized& s, double x) {
  auto hi = std::upper_bound(s.points.begin(), s.points.end(), x);
  auto lo = std::lower_bound(s.points.begin(), s.points.end(), x);
  double at = hi == s.points.begin() ? 0.0 : s.cdf[static_cast<std::size_t>(hi - s.points.begin()) - 1];
  double before = lo == s.points.begin() ? 0.0 : s.cdf[static_cast<std::size_t>(lo - s.points.begin()) - 1];
  return {at, before};
}

}  // namespace

double cdf_sup_distance(const UPoly& p) {
  const Standardized s = standardize(p);
  double sup = 0;
  double before = 0;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const double phi = normal_cdf(s.points[i]);
    sup = std::max({sup, std::abs(before - phi), std::abs(s.cdf[i] - phi)});
    before = s.cdf[i];
  }
  return sup;
}

double standardized_distance(const UPoly& p, const UPoly& q) {
  const Standardized a = standardize(p);
  const Standardized b = standardize(q);
  double sup = 0;
  for (const Standardized* s : {&a, &b}) {
    for (double x : s->points) {
      auto [fa, fa_before] = evaluate(a, x);
      auto [fb, fb_before] = evaluate(b, x);
      sup = std::max({sup, std::abs(fa - fb), std::abs(fa_before - fb_before)});
    }
  }
  return sup;
}

CltReport clt_diagnostics(Family f, std::size_t n) {
  if (n < 8) throw InputError("clt diagnostics need n >= 8");
  const auto polys = f == Family::Path ? path_gf_coeffs(n) : cycle_gf_coeffs(n);
  CltReport r;
  r.family = f;
  r.n = n;
  r.moments = pgf_moments(polys[n]);
  const Moments prev = pgf_moments(polys[n - 1]);
  r.delta_mean = r.moments.mean - prev.mean;
  r.delta_var = r.moments.variance - prev.variance;
  r.delta_mean_error = std::abs(to_double(r.delta_mean) - clt_mean_constant());
  r.delta_var_error = std::abs(to_double(r.delta_var) - clt_variance_constant());
  r.mean_offset = to_double(r.moments.mean) - clt_mean_constant() * static_cast<double>(n);
  r.cdf_sup_distance = cdf_sup_distance(polys[n]);
  return r;
}

double AsymptoticModel::zeta1(double u) const { return 0.5 * (std::sqrt(1.0 + 4.0 / u) - 1.0); }

double AsymptoticModel::zeta2(double u) const { return 0.5 * (std::sqrt(1.0 + 4.0 / u) + 1.0); }

double AsymptoticModel::B(double u) const { return 1.0 / (phi * zeta1(u)); }

double AsymptoticModel::A(double u) const {
  const double z1 = zeta1(u);
  const double z2 = zeta2(u);
  return phi * std::sqrt(5.0) * z1 * z2 * (1.0 - u * z1 * z1) / (z1 + z2);
}

AsymptoticModel asymptotic_model() { return {(std::sqrt(5.0) + 1.0) / 2.0}; }

AsymptoticCheck asymptotic_model_check() {
  const AsymptoticModel m = asymptotic_model();
  AsymptoticCheck c;
  const double h = c.step;
  c.b_at_one = m.B(1.0);
  c.a_at_one = m.A(1.0);
  c.b_prime = (m.B(1.0 + h) - m.B(1.0 - h)) / (2.0 * h);
  c.b_second = (m.B(1.0 + h) - 2.0 * m.B(1.0) + m.B(1.0 - h)) / (h * h);
  c.variability = c.b_second + c.b_prime - c.b_prime * c.b_prime;
  c.b_prime_expected = clt_mean_constant();
  c.b_second_expected = std::sqrt(5.0) / 25.0 - 0.2;
  c.variability_expected = clt_variance_constant();
  c.b_prime_ok = std::abs(c.b_prime - c.b_prime_expected) <= 1e-6;
  c.b_second_ok = std::abs(c.b_second - c.b_second_expected) <= 1e-4;
  c.variability_ok = std::abs(c.variability - c.variability_expected) <= 1e-4;
  c.unit_values_ok = std::abs(c.a_at_one - 1.0) <= 1e-10 && std::abs(c.b_at_one - 1.0) <= 1e-10;
  return c;
}

}  // namespace mixspec
