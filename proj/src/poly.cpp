#include "infw/poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "infw/errors.hpp"

namespace infw {

const char* var_name(Var v) {
  switch (v) {
    case Var::c: return "c";
    case Var::cp: return "c'";
    case Var::M: return "M";
    case Var::Ninv: return "Ninv";
  }
  return "?";
}

bool MultiPoly::Order::operator()(const Exponents& a, const Exponents& b) const {
  for (int v : {3, 2, 1, 0})
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_[Exponents{0, 0, 0, 0}] = constant;
}

MultiPoly MultiPoly::variable(Var v, int power) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const Rational& coeff, const Exponents& e) {
  MultiPoly p;
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  p.add_term(e, coeff);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, q] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

MultiPoly MultiPoly::slice(Var v, int k) const {
  MultiPoly out;
  const int i = static_cast<int>(v);
  for (const auto& [e, q] : terms_) {
    if (e[i] != k) continue;
    auto f = e;
    f[i] = 0;
    out.add_term(f, q);
  }
  return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly out;
  const int i = static_cast<int>(v);
  for (const auto& [e, q] : terms_) {
    if (e[i] == 0) continue;
    auto f = e;
    f[i] -= 1;
    out.add_term(f, q * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  MultiPoly out;
  const int d = degree(v);
  MultiPoly power(1);
  for (int k = 0; k <= d; ++k) {
    out += slice(v, k) * power;
    power *= value;
  }
  return out;
}

double MultiPoly::to_double(const std::array<double, kVarCount>& values) const {
  double sum = 0;
  for (const auto& [e, q] : terms_) {
    double t = infw::to_double(q);
    for (int i = 0; i < kVarCount; ++i) t *= std::pow(values[i], e[i]);
    sum += t;
  }
  return sum;
}

Rational MultiPoly::to_rational(const std::array<Rational, kVarCount>& values) const {
  Rational sum = 0;
  for (const auto& [e, q] : terms_) {
    Rational t = q;
    for (int i = 0; i < kVarCount; ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    sum += t;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, q);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, -q);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly out;
  for (const auto& [e, q] : terms_) {
    for (const auto& [f, r] : o.terms_) {
      Exponents g;
      for (int i = 0; i < kVarCount; ++i) g[i] = e[i] + f[i];
      out.add_term(g, q * r);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, q] : terms_) out.add_term(e, -q);
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  MultiPoly out(1), base = *this;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

std::string format_rational(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return static_cast<double>(q); }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, q] : terms_) {
    const bool constant = e == Exponents{0, 0, 0, 0};
    Rational mag = q < 0 ? Rational(-q) : q;
    if (first) os << (q < 0 ? "-" : "");
    else os << (q < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (constant || mag != 1) {
      os << format_rational(mag);
      need_star = true;
    }
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(BigInt(num), d);
}

MultiPoly MultiPoly::parse(std::string_view text) {
  MultiPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParseError("expected digits at offset " + std::to_string(i));
    std::string digits(text.substr(i, j - i));
    i = j;
    return digits;
  };
  skip();
  if (i < text.size() && text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) throw ParseError("empty polynomial");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    Rational coeff = 1;
    Exponents e{0, 0, 0, 0};
    bool any = false;
    while (true) {
      skip();
      if (i >= text.size()) break;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num = read_int();
        std::string den = "1";
        if (i < text.size() && text[i] == '/') {
          ++i;
          den = read_int();
        }
        coeff *= parse_rational(num + "/" + den);
      } else if (text.substr(i, 4) == "Ninv") {
        i += 4;
        int p = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          p = std::stoi(read_int());
        }
        e[3] += p;
      } else if (text[i] == 'M' || text[i] == 'c') {
        int v = text[i] == 'M' ? 2 : 0;
        ++i;
        if (v == 0 && i < text.size() && text[i] == '\'') {
          v = 1;
          ++i;
        }
        int p = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          p = std::stoi(read_int());
        }
        e[v] += p;
      } else {
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "'");
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("empty term");
    out.add_term(e, sign * coeff);
  }
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace infw
