#include <fmt/format.h>

#include "alexinvar/laurent.hpp"

namespace alexinvar {

template <class F>
std::string UniLaurentPoly<F>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = hi(); e >= lo_; --e) {
    const F& c = c_[e - lo_];
    if (FieldOps<F>::is_zero(c)) continue;
    std::string mono = e == 0 ? "" : (e == 1 ? var : fmt::format("{}^{}", var, e));
    std::string body;
    bool neg = false;
    if constexpr (std::is_same_v<F, Rational>) {
      neg = sgn(c) < 0;
      Rational a = abs(c);
      if (mono.empty())
        body = rat_str(a);
      else
        body = a == 1 ? mono : rat_str(a) + "*" + mono;
    } else {
      body = "(" + FieldOps<F>::str(c) + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

template class UniLaurentPoly<Rational>;
template class UniLaurentPoly<RationalFunction>;

QLaurent qpoly(std::initializer_list<long> coeffs, int lo) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QLaurent::from_coeffs({}, lo, std::move(c));
}

QLaurent parse_uni(const std::string& text, const std::string& var) {
  auto m = parse_multi(text, {var});
  QLaurent p;
  for (auto& [e, c] : m.terms()) p = p + QLaurent::monomial({}, e[0], c);
  return p;
}

// ---------------------------------------------------------------- Smith

template <class F>
SmithForm<F> smith_normal_form(const std::vector<std::vector<UniLaurentPoly<F>>>& M, int cols, FieldOps<F> ops) {
  using P = UniLaurentPoly<F>;
  SmithForm<F> s;
  int rows = static_cast<int>(M.size());
  auto& A = s.diagonal_matrix;
  A = M;
  for (auto& r : A) r.resize(cols, P(ops));
  auto rowadd = [&](int i, int j, const P& q) {
    for (int c = 0; c < cols; ++c)
      if (!A[j][c].is_zero()) A[i][c] = A[i][c] + q * A[j][c];
    s.mults.push_back(q);
    s.log.push_back({SmithMove::RowAdd, i, j, static_cast<int>(s.mults.size()) - 1});
  };
  auto coladd = [&](int i, int j, const P& q) {
    for (int r = 0; r < rows; ++r)
      if (!A[r][j].is_zero()) A[r][i] = A[r][i] + A[r][j] * q;
    s.mults.push_back(q);
    s.log.push_back({SmithMove::ColAdd, i, j, static_cast<int>(s.mults.size()) - 1});
  };
  auto rowswap = [&](int i, int j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    s.log.push_back({SmithMove::RowSwap, i, j, -1});
  };
  auto colswap = [&](int i, int j) {
    if (i == j) return;
    for (auto& r : A) std::swap(r[i], r[j]);
    s.log.push_back({SmithMove::ColSwap, i, j, -1});
  };
  int lim = std::min(rows, cols);
  for (int k = 0; k < lim; ++k) {
    int bi = -1, bj = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j)
        if (!A[i][j].is_zero() && (bi < 0 || A[i][j].span() < A[bi][bj].span())) bi = i, bj = j;
    if (bi < 0) break;
    rowswap(k, bi);
    colswap(k, bj);
    while (true) {
      bool changed = false;
      for (int i = k + 1; i < rows; ++i) {
        if (A[i][k].is_zero()) continue;
        auto q = A[i][k].divmod(A[k][k]).first;
        rowadd(i, k, -q);
        if (!A[i][k].is_zero()) {
          rowswap(i, k);
          changed = true;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (A[k][j].is_zero()) continue;
        auto q = A[k][j].divmod(A[k][k]).first;
        coladd(j, k, -q);
        if (!A[k][j].is_zero()) {
          colswap(j, k);
          changed = true;
        }
      }
      if (changed) continue;
      for (int i = k + 1; i < rows && !changed; ++i)
        for (int j = k + 1; j < cols && !changed; ++j)
          if (!A[i][j].is_zero() && !A[i][j].divmod(A[k][k]).second.is_zero()) {
            rowadd(k, i, P::monomial(ops, 0, ops.one()));
            changed = true;
          }
      if (!changed) break;
    }
    auto& d = A[k][k];
    P u = P::monomial(ops, -d.lo(), ops.one() / d.top());
    if (!(u == P::monomial(ops, 0, ops.one()))) {
      for (int c = 0; c < cols; ++c) A[k][c] = u * A[k][c];
      s.mults.push_back(u);
      s.log.push_back({SmithMove::RowScale, k, k, static_cast<int>(s.mults.size()) - 1});
    }
  }
  int nz = 0;
  for (int k = 0; k < lim; ++k)
    if (!A[k][k].is_zero()) {
      s.divisors.push_back(A[k][k]);
      ++nz;
    }
  s.zero_count = cols - nz;
  return s;
}

template <class F>
std::vector<std::vector<UniLaurentPoly<F>>> smith_replay(const SmithForm<F>& s) {
  using P = UniLaurentPoly<F>;
  auto A = s.diagonal_matrix;
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  for (auto it = s.log.rbegin(); it != s.log.rend(); ++it) {
    auto& m = *it;
    switch (m.kind) {
      case SmithMove::RowAdd:
        for (int c = 0; c < cols; ++c) A[m.a][c] = A[m.a][c] - s.mults[m.qexp] * A[m.b][c];
        break;
      case SmithMove::ColAdd:
        for (int r = 0; r < rows; ++r) A[r][m.a] = A[r][m.a] - A[r][m.b] * s.mults[m.qexp];
        break;
      case SmithMove::RowSwap:
        std::swap(A[m.a], A[m.b]);
        break;
      case SmithMove::ColSwap:
        for (auto& r : A) std::swap(r[m.a], r[m.b]);
        break;
      case SmithMove::RowScale: {
        auto& u = s.mults[m.qexp];
        auto ops = u.ops();
        P inv = P::monomial(ops, -u.lo(), ops.one() / u.top());
        for (int c = 0; c < cols; ++c) A[m.a][c] = inv * A[m.a][c];
        break;
      }
    }
  }
  return A;
}

template SmithForm<Rational> smith_normal_form(const std::vector<std::vector<QLaurent>>&, int, FieldOps<Rational>);
template SmithForm<RationalFunction> smith_normal_form(const std::vector<std::vector<KLaurent>>&, int,
                                                        FieldOps<RationalFunction>);
template std::vector<std::vector<QLaurent>> smith_replay(const SmithForm<Rational>&);
template std::vector<std::vector<KLaurent>> smith_replay(const SmithForm<RationalFunction>&);

// ---------------------------------------------------------------- minors and rank

MultiLaurentPoly determinant(const MultiMatrix& M) {
  int k = static_cast<int>(M.size());
  int nv = 0;
  for (auto& r : M)
    for (auto& e : r) nv = std::max(nv, e.nvars());
  if (k == 0) return MultiLaurentPoly::constant(nv, 1);
  std::vector<MultiLaurentPoly> f(size_t(1) << k, MultiLaurentPoly(nv));
  f[0] = MultiLaurentPoly::constant(nv, 1);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int r = __builtin_popcount(mask) - 1;
    MultiLaurentPoly acc(nv);
    int above = 0;
    for (int j = k - 1; j >= 0; --j) {
      if (!(mask & (1u << j))) continue;
      auto& prev = f[mask & ~(1u << j)];
      if (!M[r][j].is_zero() && !prev.is_zero()) {
        auto term = M[r][j] * prev;
        acc = (above % 2) ? acc - term : acc + term;
      }
      ++above;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

namespace {

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<MultiLaurentPoly> minors(const MultiMatrix& M, int k, int cols) {
  int rows = static_cast<int>(M.size());
  if (cols < 0) cols = rows ? static_cast<int>(M[0].size()) : 0;
  if (k < 0 || k > std::min(rows, cols)) throw std::invalid_argument("minor size exceeds matrix dimensions");
  std::vector<std::vector<int>> rs, cs;
  subsets(rows, k, rs);
  subsets(cols, k, cs);
  std::vector<MultiLaurentPoly> out;
  for (auto& R : rs)
    for (auto& C : cs) {
      MultiMatrix sub(k, std::vector<MultiLaurentPoly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = M[R[i]][C[j]];
      out.push_back(determinant(sub));
    }
  return out;
}

int rank_over_fractions(const MultiMatrix& M0, int cols) {
  auto A = M0;
  int rows = static_cast<int>(A.size());
  if (cols < 0) cols = rows ? static_cast<int>(A[0].size()) : 0;
  int nv = 0;
  for (auto& r : A)
    for (auto& e : r) nv = std::max(nv, e.nvars());
  for (auto& r : A)
    for (auto& e : r)
      if (e.nvars() < nv && e.is_zero()) e = MultiLaurentPoly(nv);
  MultiLaurentPoly prev = MultiLaurentPoly::constant(nv, 1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!A[i][c].is_zero() && (p < 0 || A[i][c].size() < A[p][c].size())) p = i;
    if (p < 0) continue;
    std::swap(A[p], A[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        auto v = A[rank][c] * A[i][j] - A[i][c] * A[rank][j];
        auto q = divide_exact(v, prev);
        if (!q) throw std::logic_error("fraction-free elimination lost exactness");
        A[i][j] = *q;
      }
      A[i][c] = MultiLaurentPoly(nv);
    }
    prev = A[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace alexinvar
