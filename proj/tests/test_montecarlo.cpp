#include <doctest.h>

#include <cmath>
#include <set>

#include "infw/errors.hpp"
#include "infw/moments.hpp"
#include "infw/montecarlo.hpp"

using namespace infw;

namespace {

double exact_trace(int n, int N, int M) {
  return finite_N_trace(n).to_double({0, 0, static_cast<double>(M), 1.0 / N});
}

double exact_word(const std::vector<int>& w, int N, int M) {
  return finite_N_trace_word(w).to_double({0, 0, static_cast<double>(M), 1.0 / N});
}

}  // namespace

TEST_CASE("seeding is deterministic and spreads") {
  CHECK(splitmix64(42, 0) == splitmix64(42, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t r = 0; r < 1000; ++r) seen.insert(splitmix64(42, r));
  CHECK(seen.size() == 1000);
  CHECK(splitmix64(1, 5) != splitmix64(2, 5));
}

TEST_CASE("polar Gaussian") {
  PolarGaussian a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  PolarGaussian u(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0);
    CHECK(x < 1);
  }
  PolarGaussian g(11);
  const int n = 200000;
  double s = 0, s2 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = g();
    s += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  CHECK(std::abs(s / n) < 5 / std::sqrt(n));
  CHECK(std::abs(s2 / n - 1) < 5 * std::sqrt(2.0 / n));
  CHECK(std::abs(s4 / n - 3) < 5 * std::sqrt(96.0 / n));
}

TEST_CASE("Wishart sample shape and trace routes") {
  PolarGaussian g(3);
  for (auto [N, M] : {std::pair{5, 3}, std::pair{8, 8}, std::pair{4, 11}}) {
    const auto X = sample_wishart(N, M, g);
    CHECK(X.rows() == N);
    CHECK(X.cols() == N);
    CHECK((X - X.transpose()).norm() == 0);
    CHECK(trace_power_crosscheck(X, 6) <= 1e-10);
    const auto t = trace_powers(X, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == doctest::Approx(X.trace() / N));
  }
}

TEST_CASE("same seed, same estimates") {
  WishartSpec spec{6, 4, 123, 200};
  const auto a = sample_trace_moments(spec, 4), b = sample_trace_moments(spec, 4);
  REQUIRE(a.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(a[k].n == k + 1);
    CHECK(a[k].mean == b[k].mean);
    CHECK(a[k].stderr_ == b[k].stderr_);
    CHECK(a[k].replicas == 200);
  }
  spec.seed = 124;
  CHECK(sample_trace_moments(spec, 1)[0].mean != a[0].mean);
}

TEST_CASE("small matrices agree with the exact expansion") {
  const WishartSpec spec{3, 2, 5, 40000};
  const auto est = sample_trace_moments(spec, 4);
  for (int n = 1; n <= 4; ++n) {
    const double z = (est[n - 1].mean - exact_trace(n, 3, 2)) / est[n - 1].stderr_;
    CHECK(std::abs(z) < 5);
  }
  const std::vector<int> w = {1, 2, 1, 2};
  const auto e = multi_matrix_word_estimate(w, {2, 3, 8, 40000});
  CHECK(std::abs((e.mean - exact_word(w, 2, 3)) / e.stderr_) < 5);
  // a constant word is the single-matrix trace
  const auto c = multi_matrix_word_estimate({4, 4}, {3, 2, 5, 500});
  CHECK(c.mean == doctest::Approx(sample_trace_moments({3, 2, 5, 500}, 2)[1].mean));
}

TEST_CASE("exact scaled difference") {
  // N = M = 10: E tr X^2 = 2.1, m_2(1) = 2
  CHECK(exact_scaled_difference(1, 0, 10, 2) == 1);
  CHECK(exact_scaled_difference(1, 0, 10, 1) == 0);
  // c' = 1: E tr X = c + 1/N
  CHECK(exact_scaled_difference(Rational(1, 2), 1, 8, 1) == 1);
}

TEST_CASE("infinitesimal estimate") {
  const WishartSpec tmpl{0, 0, 1, 400};
  const auto pts = infinitesimal_estimate(Rational(1, 2), 1, {4, 8}, 2, tmpl);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].M == 3);
  CHECK(pts[1].M == 5);
  for (const auto& p : pts) {
    const double exact = to_double(exact_scaled_difference(Rational(1, 2), 1, p.N, 2));
    CHECK(std::abs(p.scaled - exact) < 5 * p.stderr_);
  }
  CHECK_THROWS_AS(infinitesimal_estimate(Rational(1, 2), Rational(1, 3), {4}, 2, tmpl), DomainError);
}

TEST_CASE("argument checks and work budget") {
  CHECK_THROWS_AS(sample_trace_moments({20000, 20000, 1, 2000}, 4), CapExceeded);
  CHECK_THROWS(sample_trace_moments({0, 3, 1, 10}, 2));
  CHECK_THROWS(sample_trace_moments({3, 3, 1, 0}, 2));
  CHECK_THROWS(sample_trace_moments({3, 3, 1, 10}, 0));
  CHECK_THROWS(multi_matrix_word_estimate({1, 0}, {3, 3, 1, 10}));
}
