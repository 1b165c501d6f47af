#include "alexinvar/alexander.hpp"

#include <fmt/format.h>

#include <numeric>

namespace alexinvar {

namespace {

// rational nullspace of the relator abelianization matrix, scaled to primitive integer rows
std::vector<std::vector<long long>> integer_nullspace(const std::vector<std::vector<long long>>& R, int n) {
  std::vector<std::vector<Rational>> A;
  for (auto& r : R) {
    std::vector<Rational> row;
    for (long long x : r) row.emplace_back(static_cast<long>(x));
    A.push_back(row);
  }
  std::vector<int> pivcol;
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(A.size()); ++c) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(A.size()); ++i)
      if (sgn(A[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[rank]);
    Rational inv = 1 / A[rank][c];
    for (auto& x : A[rank]) x *= inv;
    for (int i = 0; i < static_cast<int>(A.size()); ++i) {
      if (i == rank || sgn(A[i][c]) == 0) continue;
      Rational f = A[i][c];
      for (int j = 0; j < n; ++j) A[i][j] -= f * A[rank][j];
    }
    pivcol.push_back(c);
    ++rank;
  }
  std::vector<std::vector<long long>> out;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivcol.begin(), pivcol.end(), f) != pivcol.end()) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (int i = 0; i < rank; ++i) v[pivcol[i]] = -A[i][f];
    mpz_class den = 1;
    for (auto& x : v) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> iv;
    mpz_class g = 0;
    for (auto& x : v) {
      mpz_class y = mpz_class(x * den);
      iv.push_back(y);
      g = gcd(g, y);
    }
    std::vector<long long> row;
    for (auto& y : iv) row.push_back(mpz_class(y / g).get_si());
    out.push_back(row);
  }
  return out;
}

int rank_ll(const std::vector<std::vector<long long>>& rows, int n) {
  std::vector<std::vector<Rational>> A;
  for (auto& r : rows) {
    std::vector<Rational> row;
    for (long long x : r) row.emplace_back(static_cast<long>(x));
    A.push_back(row);
  }
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(A.size()); ++c) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(A.size()); ++i)
      if (sgn(A[i][c]) != 0) p = i;
    if (p < 0) continue;
    std::swap(A[p], A[rank]);
    for (int i = rank + 1; i < static_cast<int>(A.size()); ++i) {
      Rational f = A[i][c] / A[rank][c];
      for (int j = c; j < n; ++j) A[i][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return rank;
}

void need_linking(const Presentation& p) {
  if (!p.has_linking()) throw InputError("linking data (lk:) required");
  if (!p.primitive()) throw InputError("linking map is not primitive");
}

}  // namespace

std::vector<std::vector<long long>> hom_basis(const Presentation& p) {
  need_linking(p);
  int n = p.ngens();
  std::vector<std::vector<long long>> R;
  for (auto& r : p.relators) R.push_back(abelianize(r, p));
  std::vector<std::vector<long long>> chosen{p.linking};
  for (auto& v : integer_nullspace(R, n)) {
    auto trial = chosen;
    trial.push_back(v);
    if (rank_ll(trial, n) == static_cast<int>(trial.size())) chosen = trial;
  }
  return chosen;
}

int first_betti(const Presentation& p) { return static_cast<int>(hom_basis(p).size()); }

QMatrix infinite_cyclic_matrix(const Presentation& p) {
  need_linking(p);
  QMatrix m;
  for (auto& row : fox_matrix(p)) {
    std::vector<QLaurent> r;
    for (auto& e : row) {
      QLaurent acc;
      for (auto& [w, c] : e) acc = acc + QLaurent::monomial({}, static_cast<int>(p.psi(w)), Rational(static_cast<long>(c)));
      r.push_back(acc);
    }
    m.push_back(r);
  }
  return m;
}

AlexanderResult alexander_polynomial(const Presentation& p) {
  auto M = infinite_cyclic_matrix(p);
  auto s = smith_normal_form<Rational>(M, p.ngens(), {});
  if (s.zero_count < 1) throw InputError("no free summand to attribute to the basepoint; presentation is degenerate");
  AlexanderResult r;
  r.free_rank = s.zero_count - 1;
  r.delta = qpoly({1});
  for (auto& d : s.divisors) {
    if (d.is_unit()) continue;
    r.divisors.push_back(d);
    r.delta = r.delta * d;
  }
  r.delta = r.delta.unit_normal();
  r.delta_at_one = 0;
  for (int e = r.delta.lo(); e <= r.delta.hi(); ++e) r.delta_at_one += r.delta.coeff(e);
  // product of divisors against the gcd of rank-sized minors, when that is cheap
  int rank = static_cast<int>(s.divisors.size());
  auto choose = [](int n, int k) {
    double c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
  };
  if (rank > 0 && rank <= 8 && choose(static_cast<int>(M.size()), rank) * choose(p.ngens(), rank) <= 400) {
    MultiMatrix mm;
    for (auto& row : M) {
      std::vector<MultiLaurentPoly> r2;
      for (auto& e : row) {
        MultiLaurentPoly q(1);
        if (!e.is_zero())
          for (int k = e.lo(); k <= e.hi(); ++k) q.add_term({k}, e.coeff(k));
        r2.push_back(q);
      }
      mm.push_back(r2);
    }
    MultiLaurentPoly g(1);
    for (auto& m : minors(mm, rank)) g = multi_gcd(g, m);
    QLaurent gq;
    for (auto& [e, c] : g.terms()) gq = gq + QLaurent::monomial({}, e[0], c);
    if (gq.unit_normal() != r.delta) throw std::logic_error("Smith divisors disagree with gcd of minors");
    r.minors_checked = true;
  }
  return r;
}

RootsVerdict zeros_are_roots_of_unity(const QLaurent& delta, std::optional<int> d, int n_max) {
  if (delta.is_zero()) throw std::invalid_argument("zero polynomial has no finite zero set");
  RootsVerdict v;
  QLaurent r = delta.unit_normal();
  auto strip = [&](int N) {
    QLaurent tn = QLaurent::monomial({}, N, Rational(1)) - qpoly({1});
    bool hit = false;
    while (r.span() > 0) {
      auto g = univar_gcd(r, tn);
      if (g.span() <= 0) break;
      r = r.exact_div(g)->unit_normal();
      hit = true;
    }
    if (hit) v.orders.push_back(N);
  };
  if (d) {
    strip(*d);
  } else {
    if (n_max <= 0) n_max = std::max(1, 2 * delta.span() * 12);
    for (int N = 1; N <= n_max && r.span() > 0; ++N) strip(N);
  }
  v.residue = r;
  v.cyclotomic = r.span() == 0;
  return v;
}

int t_minus_one_exponent(const QLaurent& delta) {
  if (delta.is_zero()) throw std::invalid_argument("zero polynomial");
  QLaurent r = delta;
  QLaurent tm1 = qpoly({-1, 1});
  int e = 0;
  while (auto q = r.exact_div(tm1)) {
    r = *q;
    ++e;
  }
  return e;
}

DivisibilityVerdict check_divisibility(const QLaurent& delta, const std::vector<LocalSingularity>& locals) {
  QLaurent tm1 = qpoly({-1, 1});
  auto strip = [&](QLaurent x) {
    while (auto q = x.exact_div(tm1)) x = *q;
    return x;
  };
  QLaurent prod = qpoly({1});
  for (auto& l : locals) prod = prod * l.local_alexander;
  DivisibilityVerdict v;
  auto q = strip(prod).exact_div(strip(delta));
  if (q) {
    v.divides = true;
    v.cofactor = q->unit_normal();
  }
  return v;
}

K0Result torsion_over_k0(const Presentation& p) {
  auto H = hom_basis(p);
  int s = static_cast<int>(H.size());
  K0Result out;
  out.arity = s - 1;
  FieldOps<RationalFunction> ops{s - 1};
  std::vector<std::vector<KLaurent>> M;
  for (auto& row : fox_matrix(p)) {
    std::vector<KLaurent> r;
    for (auto& e : row) {
      std::map<int, MultiLaurentPoly> by_t;
      for (auto& [w, c] : e) {
        auto a = abelianize(w, p);
        MultiLaurentPoly::Exp u(s - 1);
        long long te = 0;
        for (int i = 0; i < s; ++i) {
          long long v = 0;
          for (int j = 0; j < p.ngens(); ++j) v += H[i][j] * a[j];
          if (i == 0)
            te = v;
          else
            u[i - 1] = static_cast<int>(v);
        }
        auto [it, ins] = by_t.try_emplace(static_cast<int>(te), MultiLaurentPoly(s - 1));
        it->second.add_term(u, Rational(static_cast<long>(c)));
      }
      KLaurent acc(ops);
      for (auto& [k, poly] : by_t)
        if (!poly.is_zero()) acc = acc + KLaurent::monomial(ops, k, RationalFunction(poly));
      r.push_back(acc);
    }
    M.push_back(r);
  }
  auto sm = smith_normal_form<RationalFunction>(M, p.ngens(), ops);
  if (sm.zero_count < 1) throw InputError("no free summand to attribute to the basepoint; presentation is degenerate");
  out.free_rank = sm.zero_count - 1;
  for (auto& d : sm.divisors)
    if (!d.is_unit()) {
      out.divisors.push_back(d);
      out.torsion_degree += d.span();
    }
  return out;
}

}  // namespace alexinvar
