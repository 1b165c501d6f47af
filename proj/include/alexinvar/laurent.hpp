#pragma once
#include <gmpxx.h>

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alexinvar {

using Rational = mpq_class;

std::string rat_str(const Rational& q);

struct Limits {
  static inline std::atomic<long> max_terms{100000};
};

class TermLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_terms(size_t n);

// ---------------------------------------------------------------- multivariate

class MultiLaurentPoly {
 public:
  using Exp = std::vector<int>;

  MultiLaurentPoly() = default;
  explicit MultiLaurentPoly(int nvars) : nvars_(nvars) {}
  static MultiLaurentPoly constant(int nvars, const Rational& c);
  static MultiLaurentPoly monomial(const Exp& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  void add_term(const Exp& e, const Rational& c);

  MultiLaurentPoly operator+(const MultiLaurentPoly& o) const;
  MultiLaurentPoly operator-(const MultiLaurentPoly& o) const;
  MultiLaurentPoly operator-() const;
  MultiLaurentPoly operator*(const MultiLaurentPoly& o) const;
  MultiLaurentPoly scaled(const Rational& c) const;
  MultiLaurentPoly shifted(const Exp& e) const;
  bool operator==(const MultiLaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiLaurentPoly& o) const { return !(*this == o); }
  bool operator<(const MultiLaurentPoly& o) const { return terms_ < o.terms_; }

  Exp min_exponents() const;
  Exp max_exponents() const;
  MultiLaurentPoly unit_normal() const;
  // unit u with *this == u * unit_normal()
  MultiLaurentPoly normal_unit() const;
  // relabel variables: exponent of new variable i is sum_j A[i][j] e_j
  MultiLaurentPoly substitute(const std::vector<std::vector<long long>>& A, int new_nvars) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exp, Rational> terms_;
};

std::optional<MultiLaurentPoly> divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b);
MultiLaurentPoly multi_gcd(const MultiLaurentPoly& a, const MultiLaurentPoly& b);
MultiLaurentPoly parse_multi(const std::string& text, const std::vector<std::string>& names);

// ---------------------------------------------------------------- fractions

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int nvars) : num_(nvars), den_(MultiLaurentPoly::constant(nvars, 1)) {}
  RationalFunction(int nvars, long c) : num_(MultiLaurentPoly::constant(nvars, c)), den_(MultiLaurentPoly::constant(nvars, 1)) {}
  RationalFunction(MultiLaurentPoly num, MultiLaurentPoly den);
  explicit RationalFunction(MultiLaurentPoly num);

  const MultiLaurentPoly& num() const { return num_; }
  const MultiLaurentPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void canon();
  MultiLaurentPoly num_, den_;
};

// ---------------------------------------------------------------- field traits

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  int arity = 0;
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string str(const Rational& x) { return rat_str(x); }
};

template <>
struct FieldOps<RationalFunction> {
  int arity = 0;
  RationalFunction zero() const { return RationalFunction(arity); }
  RationalFunction one() const { return RationalFunction(arity, 1); }
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
  static std::string str(const RationalFunction& x) { return x.to_string(); }
};

// ---------------------------------------------------------------- univariate

// Laurent polynomial in one variable over a field F; c[i] is the coefficient of t^(lo+i)
template <class F>
class UniLaurentPoly {
 public:
  UniLaurentPoly() = default;
  explicit UniLaurentPoly(FieldOps<F> ops) : ops_(ops) {}
  static UniLaurentPoly monomial(FieldOps<F> ops, int e, const F& c) {
    UniLaurentPoly p(ops);
    if (!FieldOps<F>::is_zero(c)) {
      p.lo_ = e;
      p.c_.push_back(c);
    }
    return p;
  }
  static UniLaurentPoly from_coeffs(FieldOps<F> ops, int lo, std::vector<F> c) {
    UniLaurentPoly p(ops);
    p.lo_ = lo;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  const FieldOps<F>& ops() const { return ops_; }
  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int span() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_unit() const { return c_.size() == 1; }
  F coeff(int e) const {
    if (e < lo_ || e > hi() || is_zero()) return ops_.zero();
    return c_[e - lo_];
  }
  const F& top() const { return c_.back(); }
  const F& bottom() const { return c_.front(); }
  const std::vector<F>& coeffs() const { return c_; }

  UniLaurentPoly operator+(const UniLaurentPoly& o) const { return combine(o, false); }
  UniLaurentPoly operator-(const UniLaurentPoly& o) const { return combine(o, true); }
  UniLaurentPoly operator-() const {
    UniLaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniLaurentPoly operator*(const UniLaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return UniLaurentPoly(ops_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, ops_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (FieldOps<F>::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    check_terms(r.size());
    return from_coeffs(ops_, lo_ + o.lo_, std::move(r));
  }
  UniLaurentPoly scaled(const F& k) const {
    UniLaurentPoly r = *this;
    for (auto& x : r.c_) x = x * k;
    r.trim();
    return r;
  }
  UniLaurentPoly shifted(int k) const {
    UniLaurentPoly r = *this;
    r.lo_ += k;
    return r;
  }
  bool operator==(const UniLaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return lo_ == o.lo_ && c_ == o.c_;
  }
  bool operator!=(const UniLaurentPoly& o) const { return !(*this == o); }

  // f = q*g + r with r = 0 or span(r) < span(g); r keeps the low end of f
  std::pair<UniLaurentPoly, UniLaurentPoly> divmod(const UniLaurentPoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    UniLaurentPoly q(ops_), r = *this;
    while (!r.is_zero() && r.span() >= g.span()) {
      int k = r.hi() - g.hi();
      F c = r.top() / g.top();
      auto m = monomial(ops_, k, c);
      r = r - m * g;
      q = q + m;
    }
    return {q, r};
  }
  std::optional<UniLaurentPoly> exact_div(const UniLaurentPoly& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }
  UniLaurentPoly unit_normal() const {
    if (is_zero()) return *this;
    UniLaurentPoly r = shifted(-lo_);
    return r.scaled(ops_.one() / top());
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  UniLaurentPoly combine(const UniLaurentPoly& o, bool sub) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return sub ? -o : o;
    int lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
    std::vector<F> r(hi - lo + 1, ops_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[lo_ - lo + i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) {
      if (sub)
        r[o.lo_ - lo + i] -= o.c_[i];
      else
        r[o.lo_ - lo + i] += o.c_[i];
    }
    return from_coeffs(ops_, lo, std::move(r));
  }
  void trim() {
    size_t a = 0;
    while (a < c_.size() && FieldOps<F>::is_zero(c_[a])) ++a;
    if (a == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    size_t b = c_.size();
    while (FieldOps<F>::is_zero(c_[b - 1])) --b;
    c_ = std::vector<F>(c_.begin() + a, c_.begin() + b);
    lo_ += static_cast<int>(a);
  }

  FieldOps<F> ops_{};
  int lo_ = 0;
  std::vector<F> c_;
};

using QLaurent = UniLaurentPoly<Rational>;
using KLaurent = UniLaurentPoly<RationalFunction>;

QLaurent qpoly(std::initializer_list<long> coeffs, int lo = 0);
QLaurent parse_uni(const std::string& text, const std::string& var = "t");

template <class F>
UniLaurentPoly<F> univar_gcd(UniLaurentPoly<F> p, UniLaurentPoly<F> q) {
  while (!q.is_zero()) {
    auto r = p.divmod(q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.unit_normal();
}

// ---------------------------------------------------------------- Smith form

struct SmithMove {
  enum Kind { RowAdd, ColAdd, RowSwap, ColSwap, RowScale } kind;
  int a = 0, b = 0;  // RowAdd: row a += q * row b; ColAdd: col a += col b * q
  int qexp = 0;      // multiplier is a polynomial stored by index into SmithForm::mults
};

template <class F>
struct SmithForm {
  std::vector<std::vector<UniLaurentPoly<F>>> diagonal_matrix;
  std::vector<UniLaurentPoly<F>> divisors;  // nonzero diagonal entries, unit-normal, divisibility chain
  int zero_count = 0;                       // zero diagonal positions up to min(rows, cols) plus extra columns
  std::vector<SmithMove> log;
  std::vector<UniLaurentPoly<F>> mults;
};

template <class F>
SmithForm<F> smith_normal_form(const std::vector<std::vector<UniLaurentPoly<F>>>& M, int cols, FieldOps<F> ops);

// undo the logged moves on the diagonal matrix; must reproduce the input
template <class F>
std::vector<std::vector<UniLaurentPoly<F>>> smith_replay(const SmithForm<F>& s);

// ---------------------------------------------------------------- matrices

using MultiMatrix = std::vector<std::vector<MultiLaurentPoly>>;

std::vector<MultiLaurentPoly> minors(const MultiMatrix& M, int k, int cols = -1);
MultiLaurentPoly determinant(const MultiMatrix& M);
int rank_over_fractions(const MultiMatrix& M, int cols = -1);

// ---------------------------------------------------------------- cyclotomic

QLaurent cyclotomic_polynomial(int n);

class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  CyclotomicValue(int order, const QLaurent& poly);
  static CyclotomicValue zeta_power(int order, long k);
  static CyclotomicValue integer(int order, long c);

  int order() const { return n_; }
  const QLaurent& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_one() const;
  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue inverse() const;
  CyclotomicValue pow(long k) const;
  bool operator==(const CyclotomicValue& o) const { return n_ == o.n_ && p_ == o.p_; }
  std::string to_string() const;

 private:
  int n_ = 1;
  QLaurent p_;  // degree below deg Phi_n, lo >= 0
};

CyclotomicValue eval_at_character(const MultiLaurentPoly& p, const std::vector<CyclotomicValue>& lambda);
int rank_cyclotomic(std::vector<std::vector<CyclotomicValue>> M);

}  // namespace alexinvar
