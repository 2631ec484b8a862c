#pragma once

#include "mixspec/exact.hpp"
#include "mixspec/families.hpp"

#include <cstddef>
#include <vector>

namespace mixspec {

/// Dense polynomial in u with integer coefficients; coeffs[k] multiplies u^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigInt> coeffs);

  /// c * u^k
  static UPoly monomial(BigInt c, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt at_one() const;
  double eval(double u) const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const BigInt& c);
  /// Multiply by u^k.
  UPoly shifted(std::size_t k) const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// [z^n] (2z - 2uz^3) / (1 - uz - uz^2).
UPoly path_gf_coeff(std::size_t n);
/// [z^n] (2u^2z^2 + 6u^2z^3 + 4u^2z^4) / (1 - u^2z^2 - 2u^2z^3 - u^2z^4).
UPoly cycle_gf_coeff(std::size_t n);
/// All [z^m] for m = 0..n in one pass (index m).
std::vector<UPoly> path_gf_coeffs(std::size_t n);
std::vector<UPoly> cycle_gf_coeffs(std::size_t n);

UPoly family_gf_coeff(Family f, std::size_t n);

struct Moments {
  Rational mean;
  Rational variance;
};

/// Mean and variance of the law with pgf p(u)/p(1).
Moments pgf_moments(const UPoly& p);

/// Asymptotic per-step growth of mean and variance claimed for both families.
double clt_mean_constant();      // sqrt(5)/10 + 1/2
double clt_variance_constant();  // 39 sqrt(5)/250 + 63/250

/// Standard normal CDF.
double normal_cdf(double x);

/// Kolmogorov distance between the standardized law p(u)/p(1) and N(0,1).
double cdf_sup_distance(const UPoly& p);

/// Kolmogorov distance between two standardized laws.
double standardized_distance(const UPoly& p, const UPoly& q);

struct CltReport {
  Family family = Family::Path;
  std::size_t n = 0;
  Moments moments;
  Rational delta_mean;  // mean_n - mean_{n-1}
  Rational delta_var;
  double delta_mean_error = 0;  // |delta_mean - mean constant|
  double delta_var_error = 0;
  double mean_offset = 0;  // mean_n - c1 * n
  double cdf_sup_distance = 0;
};

/// n >= 8.
CltReport clt_diagnostics(Family f, std::size_t n);

struct AsymptoticModel {
  double phi;
  double zeta1(double u) const;
  double zeta2(double u) const;
  double B(double u) const;
  double A(double u) const;
};

AsymptoticModel asymptotic_model();

struct AsymptoticCheck {
  double step = 1e-5;
  double b_at_one = 0;
  double a_at_one = 0;
  double b_prime = 0;         // central difference
  double b_second = 0;        // central second difference
  double variability = 0;     // B'' + B' - B'^2 from the differences
  double b_prime_expected = 0;
  double b_second_expected = 0;
  double variability_expected = 0;
  bool b_prime_ok = false;       // within 1e-6
  bool b_second_ok = false;      // within 1e-4
  bool variability_ok = false;   // within 1e-4
  bool unit_values_ok = false;   // A(1), B(1) within 1e-10 of 1
};

AsymptoticCheck asymptotic_model_check();

}  // namespace mixspec
