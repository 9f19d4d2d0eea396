#pragma once

// Truncated power series over an exact ring, the dual numbers (a, a') and the
// quadratic extension u + v sqrt(c).

#include <stdexcept>
#include <vector>

#include "infw/poly.hpp"

namespace infw {

// Inverse of a unit of the coefficient ring.
inline Rational unit_inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("series: constant term is not invertible");
  return 1 / x;
}

inline MultiPoly unit_inverse(const MultiPoly& x) {
  const auto& t = x.terms();
  if (t.size() != 1 || t.begin()->first != MultiPoly::Exponents{0, 0, 0, 0}) {
    throw std::domain_error("series: constant term is not a nonzero rational");
  }
  return MultiPoly(1 / t.begin()->second);
}

template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(order + 1, R(0)) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : c_(order + 1, R(0)) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
  }
  static TruncatedSeries constant(int order, const R& a) { return TruncatedSeries(order, {a}); }
  static TruncatedSeries z(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_[k]; }
  R& operator[](int k) { return c_[k]; }
  const std::vector<R>& coeffs() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    return out;
  }
  friend TruncatedSeries operator*(const R& s, TruncatedSeries a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }

  TruncatedSeries inverse() const {
    TruncatedSeries out(order());
    const R inv0 = unit_inverse(c_[0]);
    out.c_[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      R s(0);
      for (int i = 1; i <= k; ++i) s += c_[i] * out.c_[k - i];
      out.c_[k] = -(inv0 * s);
    }
    return out;
  }

  // Formal square root of a series with constant term 1.
  TruncatedSeries sqrt() const {
    if (!(c_[0] == R(1))) throw std::domain_error("series sqrt needs constant term 1");
    TruncatedSeries out(order());
    out.c_[0] = R(1);
    const R half(Rational(1, 2));
    for (int k = 1; k <= order(); ++k) {
      R s = c_[k];
      for (int i = 1; i < k; ++i) s -= out.c_[i] * out.c_[k - i];
      out.c_[k] = half * s;
    }
    return out;
  }

  TruncatedSeries derivative() const {
    TruncatedSeries out(order());
    for (int k = 1; k <= order(); ++k) out.c_[k - 1] = R(k) * c_[k];
    return out;
  }

  // Multiplies by z^k, dropping what falls past the order.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries out(order());
    for (int i = 0; i + k <= order(); ++i) out.c_[i + k] = c_[i];
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series orders differ");
  }
  std::vector<R> c_;
};

// (value, infinitesimal part) with (a, a')(b, b') = (ab, ab' + a'b).
template <class R>
struct DualValue {
  R primal{};
  R infinitesimal{};

  DualValue() = default;
  DualValue(R p, R d) : primal(std::move(p)), infinitesimal(std::move(d)) {}

  friend DualValue operator+(const DualValue& a, const DualValue& b) {
    return {a.primal + b.primal, a.infinitesimal + b.infinitesimal};
  }
  friend DualValue operator-(const DualValue& a, const DualValue& b) {
    return {a.primal - b.primal, a.infinitesimal - b.infinitesimal};
  }
  friend DualValue operator*(const DualValue& a, const DualValue& b) {
    return {a.primal * b.primal, a.primal * b.infinitesimal + a.infinitesimal * b.primal};
  }
  friend bool operator==(const DualValue& a, const DualValue& b) {
    return a.primal == b.primal && a.infinitesimal == b.infinitesimal;
  }
};

// u + v sqrt(c), u and v polynomials in c.
struct QuadExt {
  MultiPoly u;
  MultiPoly v;

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) { return {a.u + b.u, a.v + b.v}; }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return {a.u - b.u, a.v - b.v}; }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    return {a.u * b.u + c_var() * a.v * b.v, a.u * b.v + a.v * b.u};
  }
  QuadExt pow(int k) const {
    QuadExt out{MultiPoly(1), MultiPoly()};
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }
  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.u == b.u && a.v == b.v; }
};

inline QuadExt sqrt_c() { return {MultiPoly(), MultiPoly(1)}; }

}  // namespace infw
