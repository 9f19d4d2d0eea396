#include "infw/montecarlo.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "infw/errors.hpp"
#include "infw/moments.hpp"

namespace infw {

namespace {

// Neumaier-compensated running sum.
struct Kahan {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct Accumulator {
  Kahan s1, s2;
  int count = 0;
  void add(double x) {
    s1.add(x);
    s2.add(x * x);
    ++count;
  }
  TraceEstimate estimate(int n) const {
    TraceEstimate e;
    e.n = n;
    e.replicas = count;
    e.mean = s1.value() / count;
    if (count > 1) {
      double var = (s2.value() - count * e.mean * e.mean) / (count - 1);
      e.stderr_ = std::sqrt(std::max(var, 0.0) / count);
    }
    return e;
  }
};

void validate(const WishartSpec& spec, int n_max) {
  if (spec.N < 1 || spec.M < 1) throw std::invalid_argument("N and M must be positive");
  if (spec.replicas < 1) throw std::invalid_argument("replicas must be positive");
  if (n_max < 1) throw std::invalid_argument("n must be positive");
  const double work = static_cast<double>(spec.replicas) * spec.N * spec.N *
                      (static_cast<double>(spec.M) + static_cast<double>(n_max) * spec.N);
  if (work > kWorkBudget) throw CapExceeded("Monte Carlo work budget exceeded");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double PolarGaussian::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double PolarGaussian::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2 * uniform() - 1;
    v = 2 * uniform() - 1;
    s = u * u + v * v;
  } while (s >= 1 || s == 0);
  const double f = std::sqrt(-2 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

Eigen::MatrixXd sample_wishart(int N, int M, PolarGaussian& gauss) {
  Eigen::MatrixXd G(N, M);
  for (int j = 0; j < M; ++j)
    for (int i = 0; i < N; ++i) G(i, j) = gauss();
  Eigen::MatrixXd X = G * G.transpose() / static_cast<double>(N);
  return X;
}

std::vector<double> trace_powers(const Eigen::MatrixXd& X, int n_max) {
  const double N = static_cast<double>(X.rows());
  std::vector<double> out;
  Eigen::MatrixXd P = X;
  for (int k = 1; k <= n_max; ++k) {
    if (k > 1) P = P * X;
    out.push_back(P.trace() / N);
  }
  return out;
}

double trace_power_crosscheck(const Eigen::MatrixXd& X, int n_max) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(X, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  auto direct = trace_powers(X, n_max);
  double worst = 0;
  for (int k = 1; k <= n_max; ++k) {
    double s = 0;
    for (int i = 0; i < ev.size(); ++i) s += std::pow(ev[i], k);
    s /= static_cast<double>(X.rows());
    worst = std::max(worst, std::abs(s - direct[k - 1]) / std::max(1.0, std::abs(s)));
  }
  return worst;
}

std::vector<TraceEstimate> sample_trace_moments(const WishartSpec& spec, int n_max) {
  validate(spec, n_max);
  std::vector<Accumulator> acc(n_max);
  for (int r = 0; r < spec.replicas; ++r) {
    PolarGaussian gauss(splitmix64(spec.seed, static_cast<std::uint64_t>(r)));
    auto tr = trace_powers(sample_wishart(spec.N, spec.M, gauss), n_max);
    for (int k = 0; k < n_max; ++k) acc[k].add(tr[k]);
  }
  std::vector<TraceEstimate> out;
  for (int k = 0; k < n_max; ++k) out.push_back(acc[k].estimate(k + 1));
  return out;
}

TraceEstimate multi_matrix_word_estimate(const std::vector<int>& word, const WishartSpec& spec) {
  const int n = static_cast<int>(word.size());
  validate(spec, n);
  for (int l : word)
    if (l < 1) throw std::invalid_argument("letters must be positive");
  Accumulator acc;
  for (int r = 0; r < spec.replicas; ++r) {
    PolarGaussian gauss(splitmix64(spec.seed, static_cast<std::uint64_t>(r)));
    std::map<int, Eigen::MatrixXd> mats;
    for (int l : word)
      if (!mats.count(l)) mats.emplace(l, sample_wishart(spec.N, spec.M, gauss));
    Eigen::MatrixXd P = mats.at(word[0]);
    for (int i = 1; i < n; ++i) P = P * mats.at(word[i]);
    acc.add(P.trace() / spec.N);
  }
  return acc.estimate(n);
}

std::vector<InfinitesimalPoint> infinitesimal_estimate(const Rational& c, const Rational& cprime,
                                                       const std::vector<int>& N_list, int n,
                                                       const WishartSpec& tmpl) {
  const double limit = to_double(mp_moment_recursion(n).to_rational({c, 0, 0, 0}));
  std::vector<InfinitesimalPoint> out;
  for (int N : N_list) {
    Rational M = c * N + cprime;
    if (denominator(M) != 1 || M < 1) {
      throw DomainError("M = cN + c' is not a positive integer for N = " + std::to_string(N));
    }
    WishartSpec spec = tmpl;
    spec.N = N;
    spec.M = static_cast<int>(numerator(M));
    auto est = sample_trace_moments(spec, n).back();
    out.push_back({N, spec.M, N * (est.mean - limit), N * est.stderr_});
  }
  return out;
}

Rational exact_scaled_difference(const Rational& c, const Rational& cprime, long long N, int n) {
  const MultiPoly trace = finite_N_trace(n);
  const Rational M = c * N + cprime;
  const Rational value = trace.to_rational({0, 0, M, Rational(1, N)});
  const Rational limit = mp_moment_recursion(n).to_rational({c, 0, 0, 0});
  return N * (value - limit);
}

}  // namespace infw
