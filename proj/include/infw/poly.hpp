#pragma once

// Exact polynomials in the variables c, c', M and Ninv (= 1/N) with rational
// coefficients. Text form: "c + 3*c^2 + c^3", "2*c*c' - 1/2*M^2*Ninv".

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>

namespace infw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Var { c = 0, cp = 1, M = 2, Ninv = 3 };
inline constexpr int kVarCount = 4;

const char* var_name(Var v);

class MultiPoly {
 public:
  using Exponents = std::array<int, kVarCount>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT: implicit on purpose
  MultiPoly(long long constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  static MultiPoly variable(Var v, int power = 1);
  static MultiPoly monomial(const Rational& coeff, const Exponents& e);

  bool is_zero() const { return terms_.empty(); }
  // Sorted so that powers of c come out ascending within each c'/M/Ninv group.
  struct Order {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  const std::map<Exponents, Rational, Order>& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;
  // Coefficient of c^k in a polynomial in c alone.
  Rational coeff_c(int k) const { return coefficient({k, 0, 0, 0}); }

  int degree(Var v) const;
  // Part of the polynomial with exponent exactly k in v, with v removed.
  MultiPoly slice(Var v, int k) const;
  MultiPoly derivative(Var v) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  MultiPoly evaluate(Var v, const Rational& value) const { return substitute(v, MultiPoly(value)); }
  // Value when every remaining variable is given; unset variables count as 0.
  double to_double(const std::array<double, kVarCount>& values) const;
  Rational to_rational(const std::array<Rational, kVarCount>& values) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;
  MultiPoly pow(int k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;
  static MultiPoly parse(std::string_view text);

 private:
  void add_term(const Exponents& e, const Rational& coeff);
  std::map<Exponents, Rational, Order> terms_;
};

inline MultiPoly c_var(int power = 1) { return MultiPoly::variable(Var::c, power); }

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);
double to_double(const Rational& q);

BigInt binomial(int n, int k);
BigInt catalan(int n);

}  // namespace infw
