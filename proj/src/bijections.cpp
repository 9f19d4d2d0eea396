#include "infw/bijections.hpp"

#include <stdexcept>
#include <string>

#include "infw/enumerate.hpp"
#include "infw/errors.hpp"
#include "infw/standard.hpp"

namespace infw {

namespace {

void reject(const std::string& what) { throw NotMember(what); }

int half_size(const Permutation& pi, const char* who) {
  if (pi.ground().is_signed() || pi.ground().n() % 2) {
    reject(std::string(who) + ": expected a permutation of [2n]");
  }
  if (!pi.is_pairing()) reject(std::string(who) + ": not a pairing");
  return pi.ground().n() / 2;
}

}  // namespace

EvenOddFrame EvenOddFrame::make(int n) {
  EvenOddFrame f;
  f.n = n;
  for (int k = 1; k <= 2 * n; ++k) {
    if (k % 2 == 0) {
      f.even_part.push_back(k);
      f.odd_part.push_back(-k);
    } else {
      f.odd_part.push_back(k);
      f.even_part.push_back(-k);
    }
  }
  return f;
}

int EvenOddFrame::psi(int x) { return x > 0 ? x / 2 : -((-x + 1) / 2); }

int EvenOddFrame::psi_inverse(int k) { return k > 0 ? 2 * k : -(2 * (-k) - 1); }

Permutation disc_pairing_to_nc(const Permutation& pi) {
  const int n = half_size(pi, "disc_pairing_to_nc");
  if (!is_nc(pi)) reject("disc_pairing_to_nc: pairing is crossing");
  Permutation w = compose(omega(2 * n), pi);
  std::vector<int> img;
  for (int k = 1; k <= n; ++k) img.push_back(w(2 * k) / 2);
  return Permutation::from_images(Ground::plain(n), img);
}

Permutation nc_to_disc_pairing(const Permutation& sigma) {
  if (!is_nc(sigma)) reject("nc_to_disc_pairing: not in NC(n)");
  const int n = sigma.ground().n();
  Ground g = Ground::plain(2 * n);
  std::vector<int> img;
  for (int x = 1; x <= 2 * n; ++x) img.push_back(x % 2 == 0 ? 2 * sigma(x / 2) : x);
  Permutation se = Permutation::from_images(g, img);
  return compose(se.inverse(), omega(2 * n), se);
}

Permutation annular_lift(const Permutation& pi) {
  const int n = half_size(pi, "annular_lift");
  const int m = 2 * n;
  Permutation e = epsilon(m);
  Permutation p = embed(pi);
  return compose(e, p, delta(m), p, e);
}

bool is_nc2_delta_annular(const Permutation& rho) {
  if (!rho.ground().is_signed() || rho.ground().n() % 2) return false;
  if (!rho.is_pairing()) return false;
  const int m = rho.ground().n();
  Permutation d = delta(m);
  if (!(compose(d, rho, d) == rho)) return false;
  for (int r = 1; r <= m; ++r)
    if (rho(r) == -r) return false;
  return is_snc_rev(rho);
}

void for_each_delta_pairing(int m, bool allow_antipodal, const std::function<void(const Permutation&)>& visit) {
  const Ground g = Ground::signed_set(m);
  std::vector<bool> used(m + 1, false);
  std::vector<std::pair<int, int>> pairs;
  std::function<void()> rec = [&]() {
    int x = 1;
    while (x <= m && used[x]) ++x;
    if (x > m) {
      visit(Permutation::from_pairs(g, pairs));
      return;
    }
    used[x] = true;
    if (allow_antipodal) {
      pairs.push_back({x, -x});
      rec();
      pairs.pop_back();
    }
    for (int y = x + 1; y <= m; ++y) {
      if (used[y]) continue;
      used[y] = true;
      for (int s : {1, -1}) {
        pairs.push_back({x, s * y});
        pairs.push_back({-x, -s * y});
        rec();
        pairs.pop_back();
        pairs.pop_back();
      }
      used[y] = false;
    }
    used[x] = false;
  };
  rec();
}

long long count_nc2_delta(int n, int cap) {
  if (n < 1) throw std::invalid_argument("count_nc2_delta: n must be positive");
  if (n > cap) throw CapExceeded("count_nc2_delta: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  long long count = 0;
  for_each_delta_pairing(2 * n, false, [&](const Permutation& rho) {
    if (is_nc2_delta_annular(rho)) ++count;
  });
  return count;
}

bool is_pairing_induced(const Permutation& rho) {
  if (!rho.ground().is_signed() || rho.ground().n() % 2) return false;
  const int m = rho.ground().n();
  Permutation q = compose(delta(m), epsilon(m), rho, epsilon(m));
  std::vector<int> img;
  for (int r = 1; r <= m; ++r) {
    if (q(r) < 0) return false;
    img.push_back(q(r));
  }
  Permutation pi = Permutation::from_images(Ground::plain(m), img);
  return pi.is_pairing() && annular_lift(pi) == rho;
}

Permutation annular_sigma_on_e(const Permutation& rho) {
  const int m = rho.ground().n();
  auto frame = EvenOddFrame::make(m / 2);
  return restrict(compose(omega_tilde(m), rho), frame.even_part);
}

Permutation annular_pairing_to_snc(const Permutation& pi) {
  const int n = half_size(pi, "annular_pairing_to_snc");
  Permutation rho = annular_lift(pi);
  if (!is_nc2_delta_annular(rho)) reject("annular_pairing_to_snc: eps pi delta pi eps is not in NC2^delta");
  Permutation se = annular_sigma_on_e(rho);
  auto frame = EvenOddFrame::make(n);
  std::vector<int> target;
  for (int x : frame.even_part) target.push_back(EvenOddFrame::psi(x));
  return transport(se, frame.even_part, target, Ground::signed_set(n));
}

Permutation snc_to_annular_pairing(const Permutation& sigma) {
  if (!is_snc_delta(sigma)) reject("snc_to_annular_pairing: not in S_NC^delta(n,-n)");
  const int n = sigma.ground().n();
  const int m = 2 * n;
  auto frame = EvenOddFrame::make(n);
  std::vector<int> source;
  for (int x : frame.even_part) source.push_back(EvenOddFrame::psi(x));
  Permutation se = transport(sigma, source, frame.even_part, Ground::signed_set(m));
  Permutation rho = compose(se.inverse(), omega_tilde(m), se);
  Permutation q = compose(delta(m), epsilon(m), rho, epsilon(m));
  std::vector<int> img;
  for (int r = 1; r <= m; ++r) img.push_back(q(r));
  return Permutation::from_images(Ground::plain(m), img);
}

KernelCheck kernel_check(const Permutation& pi, const std::vector<int>& word) {
  const int n = half_size(pi, "kernel_check");
  if (static_cast<int>(word.size()) != n) throw SizeMismatch("kernel_check: word length must be n");
  std::vector<int> doubled;
  for (int l : word) {
    doubled.push_back(l);
    doubled.push_back(l);
  }
  KernelCheck out;
  out.pi_side = permutation_refines(pi, kernel_of(doubled));
  out.sigma_side = kernel_compatible_sigma(annular_pairing_to_snc(pi), word);
  return out;
}

bool kernel_compatible(const Permutation& pi, const std::vector<int>& word) {
  auto k = kernel_check(pi, word);
  if (k.pi_side != k.sigma_side) throw std::logic_error("kernel_compatible: the two sides disagree");
  return k.pi_side;
}

bool kernel_compatible_sigma(const Permutation& sigma, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != sigma.ground().n()) {
    throw SizeMismatch("kernel_compatible_sigma: word length must be n");
  }
  return permutation_refines(sigma, tilde_extend(kernel_of(word)));
}

}  // namespace infw
