#include "infw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "infw/analytic.hpp"
#include "infw/bijections.hpp"
#include "infw/enumerate.hpp"
#include "infw/errors.hpp"
#include "infw/moments.hpp"
#include "infw/montecarlo.hpp"
#include "infw/verify.hpp"

namespace infw {

namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kSchema = "inf-wishart/1";
constexpr int kTableMax = 24;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational positive_rational(const std::string& text, const char* flag) {
  const Rational q = parse_rational(text);
  if (q <= 0) throw UsageError(std::string(flag) + " must be positive");
  return q;
}

Complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {re, 0};
    }
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("--z expects RE,IM, got '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects comma separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

std::string fixed(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Exact routes where enumeration is cheap, formulas past the caps.
MultiPoly table_m(int n) { return n <= kDefaultCaps.nc_points ? mp_moment(n) : mp_moment_recursion(n); }
MultiPoly table_annular(int n) {
  return n <= kDefaultCaps.snc_delta ? annular_term(n) : annular_term_binomial(n);
}

void render_text_table(std::ostream& out, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << " | ";
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size(), ' ');
    }
    out << '\n';
  };
  line(header);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << "-+-";
    out << std::string(width[i], '-');
  }
  out << '\n';
  for (const auto& r : rows) line(r);
}

void render_csv(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---- table / moments

struct TableConfig {
  int n_max = 6;
  bool cprime_zero = false;
  bool kappa = false;
  std::string format = "table";
};

int cmd_table(const TableConfig& cfg, std::ostream& out) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool footnote = false;
  if (cfg.kappa) {
    header = {"n", "kappa_n", "kappa'_n"};
    const auto kp = inf_cumulants(cfg.n_max);
    for (int n = 1; n <= cfg.n_max; ++n) rows.push_back({std::to_string(n), "c", kp[n].to_string()});
  } else {
    header = {"n", "m_n", "m'_n"};
    for (int n = 1; n <= cfg.n_max; ++n) {
      MultiPoly mp = table_annular(n);
      if (!cfg.cprime_zero) mp += shape_term(n);
      std::string m = table_m(n).to_string();
      if (n == 6) {
        m += " *";
        footnote = true;
      }
      rows.push_back({std::to_string(n), m, mp.to_string()});
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = cfg.kappa ? "cumulants" : "moments";
    j["cprime_zero"] = cfg.cprime_zero;
    j["rows"] = Json::array();
    for (auto& r : rows) {
      if (r[1].ends_with(" *")) r[1].resize(r[1].size() - 2);
      j["rows"].push_back({{"n", std::stoi(r[0])}, {header[1], r[1]}, {header[2], r[2]}});
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (cfg.format == "csv") {
    for (auto& r : rows)
      if (r[1].ends_with(" *")) r[1].resize(r[1].size() - 2);
    render_csv(out, header, rows);
    return kExitOk;
  }
  render_text_table(out, header, rows);
  if (!cfg.kappa && cfg.cprime_zero) out << "(c' = 0)\n";
  if (footnote) {
    out << "* top term of m_6 is c^6: the coefficient of c^k in m_n is (1/n) C(n,k-1) C(n,k),\n"
           "  which is 1 at k = n. Printings that end m_6 with c^4 carry a typo.\n";
  }
  return kExitOk;
}

struct MomentsConfig {
  int n_max = 6;
  bool cprime_zero = false;
  std::string format = "json";
};

int cmd_moments(const MomentsConfig& cfg, std::ostream& out) {
  const std::vector<std::string> header = {"n", "m", "shape", "annular", "m_prime"};
  std::vector<std::vector<std::string>> rows;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const MultiPoly shape = cfg.cprime_zero ? MultiPoly() : shape_term(n);
    const MultiPoly annular = table_annular(n);
    rows.push_back({std::to_string(n), table_m(n).to_string(), shape.to_string(), annular.to_string(),
                    (shape + annular).to_string()});
  }
  if (cfg.format == "csv") {
    render_csv(out, header, rows);
    return kExitOk;
  }
  Json j;
  j["schema"] = kSchema;
  j["n_max"] = cfg.n_max;
  j["cprime_zero"] = cfg.cprime_zero;
  j["rows"] = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["n"] = std::stoi(r[0]);
    for (std::size_t i = 1; i < header.size(); ++i) row[header[i]] = r[i];
    j["rows"].push_back(row);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// ---- verify

struct VerifyConfig {
  std::string only;
  int n = 0;
  std::string format = "text";
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  std::vector<std::string> names = suite_names();
  if (!cfg.only.empty()) {
    if (std::find(names.begin(), names.end(), cfg.only) == names.end()) {
      throw UsageError("unknown suite '" + cfg.only + "'");
    }
    names = {cfg.only};
  }
  std::vector<CheckResult> results;
  for (const auto& s : names) {
    auto r = run_suite(s, cfg.n > 0 ? std::optional<int>(cfg.n) : std::nullopt);
    results.insert(results.end(), r.begin(), r.end());
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.ok; });
  if (cfg.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["ok"] = failed == 0;
    j["checks"] = Json::array();
    for (const auto& r : results) {
      j["checks"].push_back(
          {{"suite", r.suite}, {"name", r.name}, {"n", r.n}, {"ok", r.ok}, {"detail", r.detail}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.ok ? "PASS " : "FAIL ") << r.suite << ' ' << r.name;
      if (r.n) out << " n=" << r.n;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
    if (failed) out << failed << " of " << results.size() << " checks failed\n";
    else out << "all " << results.size() << " checks passed\n";
  }
  return failed ? kExitFailed : kExitOk;
}

// ---- enumerate

struct EnumerateConfig {
  std::string family;
  int n = 3;
  std::string format = "json";
};

const std::vector<std::string> kFamilies = {"p2",        "nc",        "nc2",
                                            "snc-rev",   "snc-delta", "nc2-delta",
                                            "annular-pairings", "subleading"};

std::vector<Permutation> family_elements(const std::string& family, int n) {
  if (family == "p2") return enumerate_pairings(2 * n);
  if (family == "nc") return enumerate_nc(n);
  if (family == "nc2") return enumerate_nc2(2 * n);
  if (family == "snc-rev") return enumerate_snc_rev(n);
  if (family == "snc-delta") return enumerate_snc_delta(n);
  if (family == "subleading") return construct_subleading_pairings(n);
  std::vector<Permutation> out;
  if (family == "nc2-delta") {
    if (n > 6) throw CapExceeded("nc2-delta: n = " + std::to_string(n) + " exceeds cap 6");
    for_each_delta_pairing(2 * n, false, [&](const Permutation& rho) {
      if (is_nc2_delta_annular(rho)) out.push_back(rho);
    });
  } else if (family == "annular-pairings") {
    for_each_pairing(2 * n, [&](const Permutation& pi) {
      if (is_nc2_delta_annular(annular_lift(pi))) out.push_back(pi);
    });
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be positive");
  const auto elements = family_elements(cfg.family, cfg.n);
  if (cfg.format == "text") {
    for (const auto& p : elements) out << p.to_string() << '\n';
    return kExitOk;
  }
  Json j;
  j["schema"] = kSchema;
  j["n"] = cfg.n;
  j["family"] = cfg.family;
  j["count"] = elements.size();
  j["elements"] = Json::array();
  for (const auto& p : elements) j["elements"].push_back(p.to_string());
  out << j.dump(2) << '\n';
  return kExitOk;
}

// ---- mc

struct McConfig {
  WishartSpec spec;
  int n = 4;
  std::string word;
  std::string c = "1";
  std::string cprime = "0";
  std::string n_list;
  std::string format = "json";
};

// Exact E(tr X^n) at finite (N, M) when the pairing sum is within its cap.
std::optional<double> exact_finite(const MultiPoly& trace, int N, int M) {
  return to_double(trace.to_rational({0, 0, Rational(M), Rational(1, N)}));
}

int cmd_mc(const McConfig& cfg, std::ostream& out) {
  Json j;
  j["schema"] = kSchema;
  j["N"] = cfg.spec.N;
  j["M"] = cfg.spec.M;
  j["replicas"] = cfg.spec.replicas;
  j["seed"] = cfg.spec.seed;
  const int pairing_cap = kDefaultCaps.pairing_points / 2;

  if (!cfg.n_list.empty()) {
    const Rational c = positive_rational(cfg.c, "--c");
    const Rational cp = parse_rational(cfg.cprime);
    const auto Ns = parse_int_list(cfg.n_list, "--N-list");
    const auto points = infinitesimal_estimate(c, cp, Ns, cfg.n, cfg.spec);
    const MultiPoly limit = infinitesimal_moment(cfg.n);
    const double target = to_double(limit.to_rational({c, cp, 0, 0}));
    if (cfg.format == "csv") {
      out << "N,M,scaled,stderr,exact_scaled,limit\n";
      for (const auto& p : points) {
        out << p.N << ',' << p.M << ',' << fixed(p.scaled) << ',' << fixed(p.stderr_) << ','
            << fixed(to_double(exact_scaled_difference(c, cp, p.N, cfg.n))) << ',' << fixed(target) << '\n';
      }
      return kExitOk;
    }
    j.erase("N");
    j.erase("M");
    j["n"] = cfg.n;
    j["c"] = format_rational(c);
    j["cprime"] = format_rational(cp);
    j["limit"] = target;
    j["points"] = Json::array();
    for (const auto& p : points) {
      j["points"].push_back({{"N", p.N},
                             {"M", p.M},
                             {"scaled", p.scaled},
                             {"stderr", p.stderr_},
                             {"exact_scaled", to_double(exact_scaled_difference(c, cp, p.N, cfg.n))}});
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  if (!cfg.word.empty()) {
    const auto word = parse_int_list(cfg.word, "--word");
    const TraceEstimate est = multi_matrix_word_estimate(word, cfg.spec);
    const MultiMatrixMoment mm = multi_matrix_moment(word);
    const Rational c(cfg.spec.M, cfg.spec.N);
    const double reference = to_double(mm.order0.to_rational({c, 0, 0, 0}) +
                                       mm.order1.to_rational({c, 0, 0, 0}) / cfg.spec.N);
    j["word"] = word;
    j["mean"] = est.mean;
    j["stderr"] = est.stderr_;
    j["order0"] = mm.order0.to_string();
    j["order1"] = mm.order1.to_string();
    j["reference"] = reference;
    if (static_cast<int>(word.size()) <= pairing_cap) {
      j["exact"] = *exact_finite(finite_N_trace_word(word), cfg.spec.N, cfg.spec.M);
    }
    if (cfg.format == "csv") {
      out << "word,mean,stderr,reference\n\"" << cfg.word << "\"," << fixed(est.mean) << ',' << fixed(est.stderr_)
          << ',' << fixed(reference) << '\n';
      return kExitOk;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  const auto estimates = sample_trace_moments(cfg.spec, cfg.n);
  std::vector<std::optional<double>> exact;
  for (const auto& e : estimates) {
    exact.push_back(e.n <= pairing_cap ? exact_finite(finite_N_trace(e.n), cfg.spec.N, cfg.spec.M) : std::nullopt);
  }
  if (cfg.format == "csv") {
    out << "n,mean,stderr,exact\n";
    for (std::size_t i = 0; i < estimates.size(); ++i) {
      const auto& e = estimates[i];
      out << e.n << ',' << fixed(e.mean) << ',' << fixed(e.stderr_) << ',' << (exact[i] ? fixed(*exact[i]) : "")
          << '\n';
    }
    return kExitOk;
  }
  j["estimates"] = Json::array();
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    Json row = {{"n", e.n}, {"mean", e.mean}, {"stderr", e.stderr_}};
    if (exact[i]) {
      row["exact"] = *exact[i];
      row["z"] = e.stderr_ > 0 ? (e.mean - *exact[i]) / e.stderr_ : 0.0;
    }
    j["estimates"].push_back(row);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// ---- transform / density

struct TransformConfig {
  std::string kind = "g";
  std::string c = "1";
  std::string cprime = "0";
  std::string z;
  std::string format = "text";
};

int cmd_transform(const TransformConfig& cfg, std::ostream& out) {
  const double c = to_double(positive_rational(cfg.c, "--c"));
  const double cp = to_double(parse_rational(cfg.cprime));
  const Complex z = parse_point(cfg.z);
  const auto p = SpectralParams::make(c);
  Complex value;
  if (cfg.kind == "G") value = cauchy_G(z, p);
  else if (cfg.kind == "g") value = cauchy_g(z, p, cp);
  else if (cfg.kind == "r") value = r_partial_fraction(z, c);
  else if (cfg.kind == "gsc") value = g_semicircle(z);
  else throw UsageError("unknown --kind '" + cfg.kind + "'");
  if (cfg.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = cfg.kind;
    j["c"] = cfg.c;
    j["cprime"] = cfg.cprime;
    j["z"] = {z.real(), z.imag()};
    j["value"] = {value.real(), value.imag()};
    out << j.dump(2) << '\n';
  } else {
    out << fixed(value.real()) << ' ' << fixed(value.imag()) << '\n';
  }
  return kExitOk;
}

struct DensityConfig {
  std::string c = "1";
  std::string cprime = "1";
  int grid = 200;
};

int cmd_density(const DensityConfig& cfg, std::ostream& out) {
  const double c = to_double(positive_rational(cfg.c, "--c"));
  const double cp = to_double(parse_rational(cfg.cprime));
  const Densities d = densities_nu(SpectralParams::make(c), cp);
  const double a = d.params().a, b = d.params().b;
  out << "t,nu2,nu1\n";
  for (int i = 0; i < cfg.grid; ++i) {
    const double t = a + (b - a) * (i + 0.5) / cfg.grid;
    out << fixed(t) << ',' << fixed(d.nu2_density(t)) << ',' << fixed(d.nu1_density(t)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moments, transforms and samplers for real Wishart matrices at order 1/N", "infw"};
  app.require_subcommand(1);

  TableConfig table;
  auto* t = app.add_subcommand("table", "Moment table m_n, m'_n (or cumulants with --kappa)");
  t->add_option("--n-max", table.n_max, "Largest n")->check(CLI::Range(1, kTableMax));
  t->add_flag("--cprime-zero", table.cprime_zero, "Drop the c' terms");
  t->add_flag("--kappa", table.kappa, "Show kappa_n and kappa'_n instead");
  t->add_option("--format", table.format)->check(CLI::IsMember({"table", "json", "csv"}));

  MomentsConfig moments;
  auto* m = app.add_subcommand("moments", "Moment polynomials as JSON or CSV");
  m->add_option("--n-max", moments.n_max, "Largest n")->check(CLI::Range(1, kTableMax));
  m->add_flag("--cprime-zero", moments.cprime_zero, "Drop the c' terms");
  m->add_option("--format", moments.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyConfig verify;
  auto* v = app.add_subcommand("verify", "Run the identity suites; exit 1 on any failure");
  auto* only = v->add_option("--only", verify.only, "One suite")->check(CLI::IsMember(suite_names()));
  v->add_option("--n", verify.n, "Size for the chosen suite")->check(CLI::Range(1, 64))->needs(only);
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  EnumerateConfig enumerate;
  auto* e = app.add_subcommand("enumerate", "List a combinatorial family in cycle notation");
  e->add_option("--family", enumerate.family)->required()->check(CLI::IsMember(kFamilies));
  e->add_option("--n", enumerate.n)->check(CLI::Range(1, 64));
  e->add_option("--format", enumerate.format)->check(CLI::IsMember({"json", "text"}));

  McConfig mc;
  auto* s = app.add_subcommand("mc", "Monte Carlo estimates of E(tr X^n)");
  s->add_option("--N", mc.spec.N)->check(CLI::PositiveNumber);
  s->add_option("--M", mc.spec.M)->check(CLI::PositiveNumber);
  s->add_option("--n", mc.n, "Largest power, or the power for --N-list")->check(CLI::Range(1, 64));
  s->add_option("--replicas", mc.spec.replicas)->check(CLI::PositiveNumber);
  s->add_option("--seed", mc.spec.seed);
  s->add_option("--word", mc.word, "Letters such as 1,2,1,2: independent matrix per letter");
  s->add_option("--N-list", mc.n_list, "N values for N (E tr X^n - m_n), with M = cN + c'");
  s->add_option("--c", mc.c, "c as p/q (with --N-list)");
  s->add_option("--cprime", mc.cprime, "c' as p/q (with --N-list)");
  s->add_option("--format", mc.format)->check(CLI::IsMember({"json", "csv"}));

  TransformConfig transform;
  auto* x = app.add_subcommand("transform", "Evaluate G, g, r or the semicircle g at a point");
  x->add_option("--kind", transform.kind)->check(CLI::IsMember({"G", "g", "r", "gsc"}));
  x->add_option("--c", transform.c, "c as p/q");
  x->add_option("--cprime", transform.cprime, "c' as p/q (kind g)");
  x->add_option("--z", transform.z, "Point RE,IM")->required();
  x->add_option("--format", transform.format)->check(CLI::IsMember({"text", "json"}));

  DensityConfig density;
  auto* d = app.add_subcommand("density", "CSV of the nu2 and nu1 densities on (a, b)");
  d->add_option("--c", density.c, "c as p/q");
  d->add_option("--cprime", density.cprime, "c' as p/q");
  d->add_option("--grid", density.grid, "Number of rows")->check(CLI::Range(1, 1000000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*t) return cmd_table(table, out);
    if (*m) return cmd_moments(moments, out);
    if (*v) return cmd_verify(verify, out);
    if (*e) return cmd_enumerate(enumerate, out);
    if (*s) return cmd_mc(mc, out);
    if (*x) return cmd_transform(transform, out);
    if (*d) return cmd_density(density, out);
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& ex) {
    err << "error: " << ex.what() << " (lower --n or --n-max)\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace infw
