#pragma once

// Monte Carlo estimates of E(tr X^n) for real Wishart X = G G^t / N, G an
// N x M matrix of independent standard Gaussians. tr is the normalised trace.
//
// Reproducibility: replica r draws from std::mt19937_64 seeded with
// splitmix64(seed, r), and Gaussians come from the Marsaglia polar method on
// 53-bit uniforms, so a seed gives the same numbers on every platform.

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "infw/poly.hpp"

namespace infw {

struct WishartSpec {
  int N = 100;
  int M = 100;
  std::uint64_t seed = 42;
  int replicas = 2000;
};

struct TraceEstimate {
  int n = 0;
  double mean = 0;
  double stderr_ = 0;
  int replicas = 0;
};

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);

class PolarGaussian {
 public:
  explicit PolarGaussian(std::uint64_t seed) : engine_(seed) {}
  double operator()();
  double uniform();  // in [0, 1)

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

Eigen::MatrixXd sample_wishart(int N, int M, PolarGaussian& gauss);

// tr X^k for k = 1..n_max by repeated multiplication.
std::vector<double> trace_powers(const Eigen::MatrixXd& X, int n_max);
// Largest gap between trace_powers and the eigenvalue route.
double trace_power_crosscheck(const Eigen::MatrixXd& X, int n_max);

// Work budget in multiply-adds; above it the samplers throw CapExceeded.
inline constexpr double kWorkBudget = 2e12;

std::vector<TraceEstimate> sample_trace_moments(const WishartSpec& spec, int n_max);

// Independent matrices per distinct letter, all with the same (N, M).
TraceEstimate multi_matrix_word_estimate(const std::vector<int>& word, const WishartSpec& spec);

struct InfinitesimalPoint {
  int N = 0;
  int M = 0;
  double scaled = 0;  // N (estimate - m_n(c))
  double stderr_ = 0;
};

// M = cN + c' has to be a nonnegative integer for every N.
std::vector<InfinitesimalPoint> infinitesimal_estimate(const Rational& c, const Rational& cprime,
                                                       const std::vector<int>& N_list, int n,
                                                       const WishartSpec& tmpl);

// N (E tr X^n - m_n(c)) evaluated exactly from the pairing sum with M = cN + c'.
Rational exact_scaled_difference(const Rational& c, const Rational& cprime, long long N, int n);

}  // namespace infw
