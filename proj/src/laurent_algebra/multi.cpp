#include <fmt/format.h>

#include <algorithm>
#include <cctype>

#include "alexinvar/laurent.hpp"

namespace alexinvar {

std::string rat_str(const Rational& q) { return q.get_str(); }

void check_terms(size_t n) {
  if (static_cast<long>(n) > Limits::max_terms.load())
    throw TermLimitError(fmt::format("polynomial exceeds {} terms", Limits::max_terms.load()));
}

MultiLaurentPoly MultiLaurentPoly::constant(int nvars, const Rational& c) {
  MultiLaurentPoly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

MultiLaurentPoly MultiLaurentPoly::monomial(const Exp& e, const Rational& c) {
  MultiLaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void MultiLaurentPoly::add_term(const Exp& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MultiLaurentPoly MultiLaurentPoly::operator+(const MultiLaurentPoly& o) const {
  MultiLaurentPoly r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiLaurentPoly MultiLaurentPoly::operator-(const MultiLaurentPoly& o) const {
  MultiLaurentPoly r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiLaurentPoly MultiLaurentPoly::operator-() const {
  MultiLaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiLaurentPoly MultiLaurentPoly::operator*(const MultiLaurentPoly& o) const {
  MultiLaurentPoly r(std::max(nvars_, o.nvars_));
  Exp e(r.nvars_);
  for (auto& [a, x] : terms_)
    for (auto& [b, y] : o.terms_) {
      for (int i = 0; i < r.nvars_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, x * y);
    }
  check_terms(r.terms_.size());
  return r;
}

MultiLaurentPoly MultiLaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MultiLaurentPoly(nvars_);
  MultiLaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiLaurentPoly MultiLaurentPoly::shifted(const Exp& s) const {
  MultiLaurentPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    Exp f = e;
    for (int i = 0; i < nvars_; ++i) f[i] += s[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MultiLaurentPoly::Exp MultiLaurentPoly::min_exponents() const {
  Exp m(nvars_, 0);
  bool first = true;
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

MultiLaurentPoly::Exp MultiLaurentPoly::max_exponents() const {
  Exp m(nvars_, 0);
  bool first = true;
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

MultiLaurentPoly MultiLaurentPoly::normal_unit() const {
  if (is_zero()) return constant(nvars_, 1);
  auto m = min_exponents();
  return monomial(m, terms_.rbegin()->second);
}

MultiLaurentPoly MultiLaurentPoly::unit_normal() const {
  if (is_zero()) return *this;
  auto m = min_exponents();
  for (auto& x : m) x = -x;
  Rational lead = terms_.rbegin()->second;
  return shifted(m).scaled(1 / lead);
}

MultiLaurentPoly MultiLaurentPoly::substitute(const std::vector<std::vector<long long>>& A, int new_nvars) const {
  MultiLaurentPoly r(new_nvars);
  Exp f(new_nvars);
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < new_nvars; ++i) {
      long long s = 0;
      for (int j = 0; j < nvars_; ++j) s += A[i][j] * e[j];
      f[i] = static_cast<int>(s);
    }
    r.add_term(f, c);
  }
  return r;
}

std::string MultiLaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  auto var = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    return nvars_ == 1 ? std::string("t") : fmt::format("t{}", i + 1);
  };
  std::string out;
  bool first = true;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var(i);
      if (e[i] != 1) mono += fmt::format("^{}", e[i]);
    }
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    std::string body;
    if (mono.empty())
      body = rat_str(a);
    else if (a == 1)
      body = mono;
    else
      body = rat_str(a) + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

using Poly = MultiLaurentPoly;

// lexicographic leading term division; both arguments must be honest polynomials
std::optional<Poly> poly_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Poly q(a.nvars()), r = a;
  auto& [lb, cb] = *b.terms().rbegin();
  int n = a.nvars();
  while (!r.is_zero()) {
    auto& [lr, cr] = *r.terms().rbegin();
    Poly::Exp d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return std::nullopt;
    }
    auto m = Poly::monomial(d, cr / cb);
    r = r - m * b;
    q = q + m;
  }
  return q;
}

Poly to_poly(const Poly& p) {
  auto m = p.min_exponents();
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

int deg_in(const Poly& p, int v) {
  int d = -1;
  for (auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

std::map<int, Poly> coeffs_in(const Poly& p, int v) {
  std::map<int, Poly> out;
  for (auto& [e, c] : p.terms()) {
    auto f = e;
    f[v] = 0;
    auto [it, ins] = out.try_emplace(e[v], Poly(p.nvars()));
    it->second.add_term(f, c);
  }
  return out;
}

Poly gcd_rec(const Poly& a, const Poly& b, int v);

Poly content_in(const Poly& p, int v) {
  Poly g(p.nvars());
  for (auto& [k, c] : coeffs_in(p, v)) {
    g = g.is_zero() ? c.unit_normal() : gcd_rec(g, c, v - 1);
    if (g.size() == 1) return Poly::constant(p.nvars(), 1);
  }
  return g;
}

Poly prem_in(Poly a, const Poly& b, int v) {
  int db = deg_in(b, v);
  auto lb = coeffs_in(b, v).rbegin()->second;
  while (!a.is_zero()) {
    int da = deg_in(a, v);
    if (da < db) break;
    auto la = coeffs_in(a, v).rbegin()->second;
    Poly::Exp sh(a.nvars(), 0);
    sh[v] = da - db;
    a = lb * a - la * b.shifted(sh);
  }
  return a;
}

Poly primitive_in(const Poly& p, int v) {
  auto c = content_in(p, v);
  return *poly_div(p, c);
}

Poly gcd_rec(const Poly& a0, const Poly& b0, int v) {
  int n = std::max(a0.nvars(), b0.nvars());
  if (a0.is_zero()) return b0.unit_normal();
  if (b0.is_zero()) return a0.unit_normal();
  Poly a = to_poly(a0), b = to_poly(b0);
  while (v >= 0 && deg_in(a, v) == 0 && deg_in(b, v) == 0) --v;
  if (v < 0) return Poly::constant(n, 1);
  auto ca = content_in(a, v), cb = content_in(b, v);
  auto c = gcd_rec(ca, cb, v - 1);
  a = *poly_div(a, ca);
  b = *poly_div(b, cb);
  if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);
  while (true) {
    if (deg_in(b, v) == 0) return c.unit_normal();
    auto r = prem_in(a, b, v);
    if (r.is_zero()) break;
    a = b;
    b = primitive_in(to_poly(r), v);
  }
  return (c * b).unit_normal();
}

}  // namespace

std::optional<MultiLaurentPoly> divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
  if (a.is_zero()) return MultiLaurentPoly(std::max(a.nvars(), b.nvars()));
  auto ma = a.min_exponents(), mb = b.min_exponents();
  auto q = poly_div(to_poly(a), to_poly(b));
  if (!q) return std::nullopt;
  MultiLaurentPoly::Exp s(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) s[i] = ma[i] - mb[i];
  return q->shifted(s);
}

MultiLaurentPoly multi_gcd(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
  int n = std::max(a.nvars(), b.nvars());
  return gcd_rec(a, b, n - 1);
}

MultiLaurentPoly parse_multi(const std::string& text, const std::vector<std::string>& names) {
  int n = static_cast<int>(names.size());
  MultiLaurentPoly out(n);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(fmt::format("cannot parse polynomial '{}': {}", text, why));
  };
  auto read_int = [&]() {
    skip();
    size_t s = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == s || (i == s + 1 && !std::isdigit(static_cast<unsigned char>(text[s])))) fail("expected integer");
    return std::stol(text.substr(s, i - s));
  };
  skip();
  if (i == text.size()) fail("empty");
  int sign = 1;
  if (text[i] == '-') {
    sign = -1;
    ++i;
  } else if (text[i] == '+') {
    ++i;
  }
  while (true) {
    Rational c = sign;
    MultiLaurentPoly::Exp e(n, 0);
    bool any = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        size_t s = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        c *= Rational(text.substr(s, i - s));
        any = true;
      } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        size_t s = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        auto name = text.substr(s, i - s);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable " + name);
        int k = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          k = static_cast<int>(read_int());
        }
        e[it - names.begin()] += k;
        any = true;
      } else {
        fail("unexpected character");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) continue;  // 2t^3
      break;
    }
    if (!any) fail("empty term");
    c.canonicalize();
    out.add_term(e, c);
    skip();
    if (i == text.size()) break;
    if (text[i] == '+')
      sign = 1;
    else if (text[i] == '-')
      sign = -1;
    else
      fail("expected + or -");
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(MultiLaurentPoly num, MultiLaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canon();
}

RationalFunction::RationalFunction(MultiLaurentPoly num) : num_(std::move(num)) {
  den_ = MultiLaurentPoly::constant(num_.nvars(), 1);
  canon();
}

void RationalFunction::canon() {
  int n = std::max(num_.nvars(), den_.nvars());
  if (num_.is_zero()) {
    num_ = MultiLaurentPoly(n);
    den_ = MultiLaurentPoly::constant(n, 1);
    return;
  }
  if (den_.size() > 1) {
    auto g = multi_gcd(num_, den_);
    if (g.size() > 1) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  auto u = den_.normal_unit();
  auto& [e, c] = *u.terms().begin();
  auto neg = e;
  for (auto& x : neg) x = -x;
  Rational inv = 1 / c;
  num_ = num_.shifted(neg).scaled(inv);
  den_ = den_.shifted(neg).scaled(inv);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(std::max(nvars(), o.nvars()));
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  if (is_zero()) return *this;
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (den_.size() == 1 && den_.terms().begin()->second == 1 && den_.min_exponents() == den_.max_exponents() &&
      std::all_of(den_.min_exponents().begin(), den_.min_exponents().end(), [](int x) { return x == 0; }))
    return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace alexinvar
