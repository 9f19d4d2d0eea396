#pragma once

// Generating functions, Cauchy transforms and the signed measures behind the
// infinitesimal moments.
//
// Branch of sqrt(P(z)), P(z) = (z - a)(z - b): sqrt(z - a) * sqrt(z - b) with
// principal roots. The cut is exactly [a, b] and sqrt(P(z)) ~ z at infinity.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "infw/poly.hpp"
#include "infw/series.hpp"

namespace infw {

using Complex = std::complex<double>;

struct SpectralParams {
  double c = 1;
  double a = 0;   // (1 - sqrt c)^2
  double b = 4;   // (1 + sqrt c)^2
  double c1 = 0;  // 1/(1 - sqrt c), unused when c = 1
  double c2 = 0.5;
  static SpectralParams make(double c);
  bool critical() const { return c == 1.0; }
};

// M(z) = 1 + sum m_n z^n.
TruncatedSeries<MultiPoly> series_M(int order);
TruncatedSeries<Rational> series_M(int order, const Rational& c);
// mbar(z) = sum_{n>=1} annular_n z^n, from the binomial formula.
TruncatedSeries<MultiPoly> series_mbar(int order);

struct GeneratingFunctionCheck {
  bool symbolic = false;     // mbar (1 + z(1-c) - 2 z M) = z^2 M'
  bool catalan = false;      // c = 1: m (1 - 2 z M) = z^2 M'
  bool closed_form = false;  // c = 1: m = (1 - 2z - sqrt(1-4z)) / (2(1-4z))
  bool ok() const { return symbolic && catalan && closed_form; }
};
GeneratingFunctionCheck verify_mbar_gf(int order);

Complex sqrt_P(Complex z, const SpectralParams& p);
Complex cauchy_G(Complex z, const SpectralParams& p);
// Partial-fraction form of the annular Cauchy transform.
Complex cauchy_g(Complex z, const SpectralParams& p);
// (z G(z) - 1) / P(z).
Complex cauchy_g_quotient(Complex z, const SpectralParams& p);
// c' term plus annular term: sum m'_n z^-(n+1).
Complex cauchy_g(Complex z, const SpectralParams& p, double cprime);

// Exact series in w = 1/z of the closed forms of g, with coefficients in
// c, c'. Coefficient k of the result multiplies w^k.
TruncatedSeries<MultiPoly> cauchy_g_series(int order, bool with_cprime);

// (1 / 2 pi i) * contour integral of z^n f(z) over |z| = radius, by the
// trapezoid rule: the coefficient of z^-(n+1) in a Laurent tail.
double contour_coefficient(const std::function<Complex(Complex)>& f, int n, double radius, int points = 4096);

struct Atom {
  double at;
  double mass;
};

class Densities {
 public:
  Densities(const SpectralParams& p, double cprime) : p_(p), cprime_(cprime) {}
  const SpectralParams& params() const { return p_; }
  // Absolutely continuous parts; domain_error outside the open interval (a, b).
  double nu1_density(double t) const;
  double nu2_density(double t) const;
  std::vector<Atom> nu1_atoms() const;
  std::vector<Atom> nu2_atoms() const;
  // Atoms plus Gauss-Kronrod quadrature of the density part.
  double nu1_moment(int n) const;
  double nu2_moment(int n) const;

 private:
  // Integral of f(t) / sqrt((b - t)(t - a)) over (a, b).
  double arcsine_integral(const std::function<double(double)>& f) const;
  SpectralParams p_;
  double cprime_;
};

Densities densities_nu(const SpectralParams& p, double cprime);

// kappa'_n = ((1 - sqrt c)^n + (1 + sqrt c)^n - 2) / 2, n = 1..n_max (index 0 unused).
std::vector<MultiPoly> inf_cumulants(int n_max);

struct DualMoments {
  std::vector<MultiPoly> m;        // index 1..n_max
  std::vector<MultiPoly> m_prime;  // index 1..n_max
};
// m_n + eps m'_n = sum over NC(n) of prod over blocks (kappa_|V| + eps kappa'_|V|).
DualMoments dual_moment_cumulant(const std::vector<MultiPoly>& kappa, const std::vector<MultiPoly>& kappa_prime);

Complex K_transform(Complex z, double c);  // 1/z + c/(1 - z)
Complex K_derivative(Complex z, double c);
Complex r_partial_fraction(Complex z, double c);
Complex r_from_g(Complex z, double c);  // -g(K(z)) K'(z)
double r_transform_check(const std::vector<Complex>& points, double c);

Complex g_semicircle(Complex w);
double goe_rescaling_check(const std::vector<Complex>& points, double c);

}  // namespace infw
