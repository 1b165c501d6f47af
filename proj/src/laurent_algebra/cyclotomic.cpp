#include <fmt/format.h>

#include <map>
#include <mutex>

#include "alexinvar/laurent.hpp"

namespace alexinvar {

namespace {

using Dense = std::vector<Rational>;  // ascending coefficients, no trailing zeros

void strip(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Dense to_dense(const QLaurent& p) {
  if (p.is_zero()) return {};
  Dense d(p.hi() + 1, Rational(0));
  for (int e = p.lo(); e <= p.hi(); ++e) d[e] = p.coeff(e);
  return d;
}

QLaurent from_dense(Dense d) {
  strip(d);
  return QLaurent::from_coeffs({}, 0, std::move(d));
}

// remainder and quotient of ordinary polynomial division
std::pair<Dense, Dense> pdivmod(Dense a, const Dense& b) {
  strip(a);
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    strip(a);
  }
  strip(q);
  return {q, a};
}

Dense pmul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strip(r);
  return r;
}

Dense psub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

const Dense& phi_dense(int n) {
  static std::recursive_mutex mu;
  static std::map<int, Dense> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Dense p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = pdivmod(p, phi_dense(d)).first;
  return cache.emplace(n, p).first->second;
}

}  // namespace

QLaurent cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return from_dense(phi_dense(n));
}

CyclotomicValue::CyclotomicValue(int order, const QLaurent& poly) : n_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (poly.is_zero()) return;
  // zeta^n = 1 lets negative exponents wrap around
  int lo = poly.lo();
  int shift = lo < 0 ? ((-lo + order - 1) / order) * order : 0;
  auto d = to_dense(poly.shifted(shift));
  p_ = from_dense(pdivmod(d, phi_dense(order)).second);
}

CyclotomicValue CyclotomicValue::zeta_power(int order, long k) {
  long r = ((k % order) + order) % order;
  return CyclotomicValue(order, QLaurent::monomial({}, static_cast<int>(r), Rational(1)));
}

CyclotomicValue CyclotomicValue::integer(int order, long c) {
  return CyclotomicValue(order, QLaurent::monomial({}, 0, Rational(c)));
}

bool CyclotomicValue::is_one() const { return p_ == QLaurent::monomial({}, 0, Rational(1)); }

static void same_order(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.order() != b.order()) throw std::invalid_argument("inconsistent cyclotomic orders");
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  same_order(*this, o);
  return CyclotomicValue(n_, p_ + o.p_);
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const {
  same_order(*this, o);
  return CyclotomicValue(n_, p_ - o.p_);
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  same_order(*this, o);
  return CyclotomicValue(n_, p_ * o.p_);
}

CyclotomicValue CyclotomicValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // extended Euclid: s*a + t*phi = g (constant)
  Dense a = to_dense(p_), b = phi_dense(n_);
  Dense s0{Rational(1)}, s1{};
  while (!b.empty()) {
    auto [q, r] = pdivmod(a, b);
    auto s2 = psub(s0, pmul(q, s1));
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
  }
  // a is a nonzero constant since phi is irreducible
  Rational g = a[0];
  for (auto& x : s0) x /= g;
  return CyclotomicValue(n_, from_dense(s0));
}

CyclotomicValue CyclotomicValue::pow(long k) const {
  CyclotomicValue base = k >= 0 ? *this : inverse();
  unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
  CyclotomicValue r = integer(n_, 1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string CyclotomicValue::to_string() const {
  if (p_.is_zero()) return "0";
  return p_.to_string(fmt::format("z{}", n_));
}

CyclotomicValue eval_at_character(const MultiLaurentPoly& p, const std::vector<CyclotomicValue>& lambda) {
  if (static_cast<int>(lambda.size()) != p.nvars() && !p.is_zero())
    throw std::invalid_argument("character arity does not match polynomial");
  int n = lambda.empty() ? 1 : lambda[0].order();
  for (auto& l : lambda) {
    if (l.order() != n) throw std::invalid_argument("inconsistent cyclotomic orders");
    if (l.is_zero()) throw std::invalid_argument("character entries must be nonzero");
  }
  CyclotomicValue acc = CyclotomicValue::integer(n, 0);
  for (auto& [e, c] : p.terms()) {
    CyclotomicValue term(n, QLaurent::monomial({}, 0, c));
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * lambda[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

int rank_cyclotomic(std::vector<std::vector<CyclotomicValue>> A) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!A[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[rank]);
    auto inv = A[rank][c].inverse();
    for (int i = rank + 1; i < rows; ++i) {
      if (A[i][c].is_zero()) continue;
      auto f = A[i][c] * inv;
      for (int j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace alexinvar
