#include "infw/analytic.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "infw/enumerate.hpp"
#include "infw/errors.hpp"
#include "infw/moments.hpp"

namespace infw {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void off_cut(Complex z, const SpectralParams& p) {
  const double scale = std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) <= 1e-14 * scale && z.real() >= p.a - 1e-14 * scale && z.real() <= p.b + 1e-14 * scale) {
    throw DomainError("point lies on the cut [a, b]");
  }
}

void off_zero(Complex z) {
  if (std::abs(z) < 1e-300) throw DomainError("z = 0");
}

}  // namespace

SpectralParams SpectralParams::make(double c) {
  if (!(c > 0)) throw DomainError("c must be positive");
  SpectralParams p;
  const double s = std::sqrt(c);
  p.c = c;
  p.a = (1 - s) * (1 - s);
  p.b = (1 + s) * (1 + s);
  p.c1 = c == 1.0 ? 0.0 : 1 / (1 - s);
  p.c2 = 1 / (1 + s);
  return p;
}

TruncatedSeries<MultiPoly> series_M(int order) {
  TruncatedSeries<MultiPoly> s(order);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[n] = mp_moment_recursion(n);
  return s;
}

TruncatedSeries<Rational> series_M(int order, const Rational& c) {
  TruncatedSeries<Rational> s(order);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[n] = mp_moment_recursion(n).to_rational({c, 0, 0, 0});
  return s;
}

TruncatedSeries<MultiPoly> series_mbar(int order) {
  TruncatedSeries<MultiPoly> s(order);
  for (int n = 1; n <= order; ++n) s[n] = annular_term_binomial(n);
  return s;
}

GeneratingFunctionCheck verify_mbar_gf(int order) {
  if (order < 2) throw std::invalid_argument("verify_mbar_gf: order must be at least 2");
  GeneratingFunctionCheck out;
  {
    using S = TruncatedSeries<MultiPoly>;
    const S M = series_M(order);
    const S mbar = series_mbar(order);
    const S z = S::z(order);
    const S one = S::constant(order, MultiPoly(1));
    const S lhs = mbar * (one + MultiPoly(1) * (MultiPoly(1) - c_var()) * z - MultiPoly(2) * (z * M));
    const S rhs = (z * z) * M.derivative();
    out.symbolic = lhs == rhs;
  }
  {
    using S = TruncatedSeries<Rational>;
    S M(order), m(order);
    for (int n = 0; n <= order; ++n) M[n] = Rational(catalan(n));
    for (int n = 1; n <= order; ++n) m[n] = Rational(snc_delta_count(n));
    const S z = S::z(order);
    const S one = S::constant(order, 1);
    out.catalan = m * (one - Rational(2) * (z * M)) == (z * z) * M.derivative();
    const S root = (one - Rational(4) * z).sqrt();
    const S closed = (one - Rational(2) * z - root) * (Rational(2) * (one - Rational(4) * z)).inverse();
    out.closed_form = closed == m;
  }
  return out;
}

Complex sqrt_P(Complex z, const SpectralParams& p) {
  off_cut(z, p);
  return std::sqrt(z - p.a) * std::sqrt(z - p.b);
}

Complex cauchy_G(Complex z, const SpectralParams& p) {
  off_zero(z);
  return (z + 1.0 - p.c - sqrt_P(z, p)) / (2.0 * z);
}

Complex cauchy_g(Complex z, const SpectralParams& p) {
  const Complex s = sqrt_P(z, p);
  return 0.5 * (0.5 * (1.0 / (z - p.a) + 1.0 / (z - p.b)) - 1.0 / s);
}

Complex cauchy_g_quotient(Complex z, const SpectralParams& p) {
  const Complex P = (z - p.a) * (z - p.b);
  return (z * cauchy_G(z, p) - 1.0) / P;
}

Complex cauchy_g(Complex z, const SpectralParams& p, double cprime) {
  off_zero(z);
  const Complex s = sqrt_P(z, p);
  const double c = p.c;
  const Complex shape =
      -cprime / (z * s) * ((1 - c) * (1 - c) - (1 + c) * z - (1 - c) * s) / (s + z - 1.0 + c);
  return shape + cauchy_g(z, p);
}

TruncatedSeries<MultiPoly> cauchy_g_series(int order, bool with_cprime) {
  using S = TruncatedSeries<MultiPoly>;
  const MultiPoly c = c_var();
  const MultiPoly one_minus_c = MultiPoly(1) - c;
  const S w = S::z(order);
  const S one = S::constant(order, MultiPoly(1));
  // Q(w) = w^2 P(1/w).
  S Q(order, {MultiPoly(1), MultiPoly(-2) * (MultiPoly(1) + c), one_minus_c * one_minus_c});
  const S root = Q.sqrt();
  const S inv_root = root.inverse();

  S g(order);
  const QuadExt a{MultiPoly(1) + c, MultiPoly(-2)};
  const QuadExt b{MultiPoly(1) + c, MultiPoly(2)};
  for (int k = 0; k + 1 <= order; ++k) {
    QuadExt sum = a.pow(k) + b.pow(k);
    if (!sum.v.is_zero()) throw std::logic_error("a^k + b^k left a sqrt(c) part");
    g[k + 1] = MultiPoly(Rational(1, 4)) * sum.u;
  }
  g -= MultiPoly(Rational(1, 2)) * inv_root.shifted(1);
  if (with_cprime) {
    const MultiPoly cp = MultiPoly::variable(Var::cp);
    const S numer = (one_minus_c * one_minus_c) * w - S::constant(order, MultiPoly(1) + c) - one_minus_c * root;
    const S denom = root + one - one_minus_c * w;
    g += (-cp) * (inv_root * numer * denom.inverse()).shifted(2);
  }
  return g;
}

double contour_coefficient(const std::function<Complex(Complex)>& f, int n, double radius, int points) {
  Complex sum = 0;
  for (int t = 0; t < points; ++t) {
    const double theta = 2 * kPi * (t + 0.5) / points;
    const Complex z = std::polar(radius, theta);
    sum += std::pow(z, n + 1) * f(z);
  }
  return (sum / static_cast<double>(points)).real();
}

double Densities::arcsine_integral(const std::function<double(double)>& f) const {
  const double a = p_.a, b = p_.b;
  auto g = [&](double theta) {
    const double s = std::sin(theta);
    return 2 * f(a + (b - a) * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, 0.0, kPi / 2, 15, 1e-14);
}

double Densities::nu1_density(double t) const {
  if (!(t > p_.a && t < p_.b)) throw DomainError("nu1 density outside (a, b)");
  return cprime_ * (t + 1 - p_.c) / (2 * kPi * t * std::sqrt((p_.b - t) * (t - p_.a)));
}

double Densities::nu2_density(double t) const {
  if (!(t > p_.a && t < p_.b)) throw DomainError("nu2 density outside (a, b)");
  return -1 / (2 * kPi * std::sqrt((p_.b - t) * (t - p_.a)));
}

std::vector<Atom> Densities::nu1_atoms() const {
  if (p_.c < 1) return {{0.0, -cprime_}};
  if (p_.c == 1.0) return {{0.0, -cprime_ / 2}};
  return {};
}

std::vector<Atom> Densities::nu2_atoms() const { return {{p_.a, 0.25}, {p_.b, 0.25}}; }

double Densities::nu1_moment(int n) const {
  double sum = 0;
  for (const auto& atom : nu1_atoms()) sum += atom.mass * std::pow(atom.at, n);
  const double c = p_.c;
  std::function<double(double)> f;
  if (n >= 1) {
    f = [&](double t) { return (t + 1 - c) * std::pow(t, n - 1); };
  } else if (c == 1.0) {
    f = [](double) { return 1.0; };
  } else {
    f = [&](double t) { return (t + 1 - c) / t; };
  }
  return sum + cprime_ / (2 * kPi) * arcsine_integral(f);
}

double Densities::nu2_moment(int n) const {
  double sum = 0;
  for (const auto& atom : nu2_atoms()) sum += atom.mass * std::pow(atom.at, n);
  return sum - arcsine_integral([n](double t) { return std::pow(t, n); }) / (2 * kPi);
}

Densities densities_nu(const SpectralParams& p, double cprime) { return Densities(p, cprime); }

std::vector<MultiPoly> inf_cumulants(int n_max) {
  std::vector<MultiPoly> out(n_max + 1);
  const QuadExt lo{MultiPoly(1), MultiPoly(-1)};
  const QuadExt hi{MultiPoly(1), MultiPoly(1)};
  for (int n = 1; n <= n_max; ++n) {
    QuadExt s = lo.pow(n) + hi.pow(n);
    if (!s.v.is_zero()) throw std::logic_error("odd powers of sqrt(c) did not cancel");
    out[n] = MultiPoly(Rational(1, 2)) * (s.u - MultiPoly(2));
  }
  return out;
}

DualMoments dual_moment_cumulant(const std::vector<MultiPoly>& kappa, const std::vector<MultiPoly>& kappa_prime) {
  if (kappa.size() != kappa_prime.size()) throw std::invalid_argument("cumulant lists differ in length");
  const int n_max = static_cast<int>(kappa.size()) - 1;
  DualMoments out;
  out.m.resize(n_max + 1);
  out.m_prime.resize(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    DualValue<MultiPoly> total{MultiPoly(), MultiPoly()};
    for (const auto& p : enumerate_nc(n)) {
      DualValue<MultiPoly> term{MultiPoly(1), MultiPoly()};
      for (const auto& cyc : p.cycles()) {
        const int size = static_cast<int>(cyc.size());
        term = term * DualValue<MultiPoly>(kappa[size], kappa_prime[size]);
      }
      total = total + term;
    }
    out.m[n] = total.primal;
    out.m_prime[n] = total.infinitesimal;
  }
  return out;
}

Complex K_transform(Complex z, double c) { return 1.0 / z + c / (1.0 - z); }

Complex K_derivative(Complex z, double c) { return -1.0 / (z * z) + c / ((1.0 - z) * (1.0 - z)); }

Complex r_partial_fraction(Complex z, double c) {
  const auto p = SpectralParams::make(c);
  auto near = [&](double pole) { return std::abs(z - pole) < 1e-9; };
  if (near(1.0) || near(p.c2) || (!p.critical() && near(p.c1))) throw DomainError("r: too close to a pole");
  Complex s = 1.0 / (p.c2 - z) - 2.0 / (1.0 - z);
  if (!p.critical()) s += 1.0 / (p.c1 - z);
  return 0.5 * s;
}

Complex r_from_g(Complex z, double c) {
  if (std::abs(z) < 1e-9 || std::abs(1.0 - z) < 1e-9) throw DomainError("r: too close to a pole");
  const auto p = SpectralParams::make(c);
  return -cauchy_g(K_transform(z, c), p) * K_derivative(z, c);
}

double r_transform_check(const std::vector<Complex>& points, double c) {
  double worst = 0;
  for (Complex z : points) worst = std::max(worst, std::abs(r_partial_fraction(z, c) - r_from_g(z, c)));
  return worst;
}

Complex g_semicircle(Complex w) {
  const double scale = std::max(1.0, std::abs(w));
  if (std::abs(w.imag()) <= 1e-14 * scale && std::abs(w.real()) <= 2 + 1e-14 * scale) {
    throw DomainError("point lies on the cut [-2, 2]");
  }
  return 0.5 * (0.5 * (1.0 / (w - 2.0) + 1.0 / (w + 2.0)) - 1.0 / (std::sqrt(w - 2.0) * std::sqrt(w + 2.0)));
}

double goe_rescaling_check(const std::vector<Complex>& points, double c) {
  const auto p = SpectralParams::make(c);
  const double s = std::sqrt(c);
  double worst = 0;
  for (Complex z : points) {
    const Complex w = (z - (1 + c)) / s;
    worst = std::max(worst, std::abs(cauchy_g(z, p) - g_semicircle(w) / s));
  }
  return worst;
}

}  // namespace infw
