#include <fmt/format.h>

#include <algorithm>

#include "alexinvar/higher_order.hpp"

namespace alexinvar {

namespace {

struct SplitNeeded {
  Word fact;
};
struct Stuck {};

using Poly = SkewLaurentPoly;
using Mat = SkewMatrix;

bool is_mono(const Coef& c) { return c.size() == 1 && abs(c.begin()->second) == 1; }

Coef cinv_mono(const Coef& c) {
  auto& [w, v] = *c.begin();
  return {{inverse(w), v}};
}

int span(const Poly& f) { return f.rbegin()->first - f.begin()->first; }

Poly trim(QuotientOracle& q, const Poly& f) {
  Poly out;
  for (auto& [k, c] : f) {
    auto n = q.ncoef(c);
    if (!n.empty()) out.emplace(k, std::move(n));
  }
  return out;
}

Coef coef_sub(const Coef& a, const Coef& b) {
  Coef r = a;
  for (auto& [w, v] : b) {
    r[w] -= v;
    if (sgn(r[w]) == 0) r.erase(w);
  }
  return r;
}

Word wpow(const Word& w, int k) { return power(w, k); }

// e = sum_h p_h(w) h (left) or h p_h(w) (right)
std::vector<std::pair<Word, std::map<int, Rational>>> coset_split(QuotientOracle& q, const Coef& e, const Word& w,
                                                                  bool left) {
  auto kw = q.key0(w);
  std::vector<size_t> nz;
  for (size_t i = 0; i < kw.size(); ++i)
    if (kw[i]) nz.push_back(i);
  std::vector<std::pair<Word, std::map<int, Rational>>> groups;
  for (auto& [g, v] : e) {
    bool placed = false;
    auto kg = q.key0(g);
    for (auto& [h, poly] : groups) {
      auto kh = q.key0(h);
      std::vector<long long> diff(kg.size());
      for (size_t i = 0; i < kg.size(); ++i) diff[i] = kg[i] - kh[i];
      std::vector<int> cands;
      if (!nz.empty()) {
        size_t i0 = nz[0];
        if (diff[i0] % kw[i0]) continue;
        long long k = diff[i0] / kw[i0];
        bool ok = true;
        for (size_t i = 0; i < diff.size(); ++i) ok &= diff[i] == k * kw[i];
        if (!ok) continue;
        cands = {static_cast<int>(k)};
      } else {
        bool any = false;
        for (auto d : diff) any |= d != 0;
        if (any) continue;
        cands = {-3, -2, -1, 0, 1, 2, 3};
      }
      for (int k : cands) {
        Word wk = wpow(w, k);
        Word test = left ? concat(wk, h) : concat(h, wk);
        if (q.norm(test) == q.norm(g)) {
          poly[k] += v;
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) groups.push_back({g, {{0, v}}});
  }
  return groups;
}

// p(w) / (lam + mu w), exact or nothing
std::optional<std::map<int, Rational>> poly_div_linear(std::map<int, Rational> p, const Rational& lam,
                                                       const Rational& mu) {
  std::map<int, Rational> q;
  if (p.empty()) return q;
  int lo = p.begin()->first, hi = p.rbegin()->first;
  for (int k = hi; k > lo; --k) {
    Rational c = p.count(k) ? p[k] : Rational(0);
    if (sgn(c) == 0) continue;
    q[k - 1] = c / mu;
    p[k] = 0;
    p[k - 1] -= lam * c / mu;
  }
  if (sgn(p[lo]) != 0) return std::nullopt;
  for (auto it = q.begin(); it != q.end();) it = sgn(it->second) == 0 ? q.erase(it) : std::next(it);
  return q;
}

// x with u * x = e
std::optional<Coef> left_divide(QuotientOracle& q, const Coef& u, const Coef& e) {
  if (u.size() == 1) {
    auto& [g, lam] = *u.begin();
    Coef x;
    for (auto& [h, v] : e) x[q.norm(concat(inverse(g), h))] += v / lam;
    return q.ncoef(x);
  }
  if (u.size() != 2) return std::nullopt;
  auto it = u.begin();
  auto [g1, lam] = *it++;
  auto [g2, mu] = *it;
  Word w = q.norm(concat(g2, inverse(g1)));
  Coef y;
  for (auto& [h, poly] : coset_split(q, e, w, true)) {
    auto d = poly_div_linear(poly, lam, mu);
    if (!d) return std::nullopt;
    for (auto& [k, c] : *d) y[q.norm(concat(wpow(w, k), h))] += c;
  }
  Coef x0;
  for (auto& [h, c] : y) x0[q.norm(concat(inverse(g1), h))] += c;
  auto x = q.ncoef(x0);
  if (!q.ncoef(coef_sub(q.cmul(u, x), e)).empty()) return std::nullopt;
  return x;
}

// x with x * u = e
std::optional<Coef> right_divide(QuotientOracle& q, const Coef& e, const Coef& u) {
  if (u.size() == 1) {
    auto& [g, lam] = *u.begin();
    Coef x;
    for (auto& [h, v] : e) x[q.norm(concat(h, inverse(g)))] += v / lam;
    return q.ncoef(x);
  }
  if (u.size() != 2) return std::nullopt;
  auto it = u.begin();
  auto [g1, lam] = *it++;
  auto [g2, mu] = *it;
  Word w = q.norm(concat(inverse(g1), g2));
  Coef y;
  for (auto& [h, poly] : coset_split(q, e, w, false)) {
    auto d = poly_div_linear(poly, lam, mu);
    if (!d) return std::nullopt;
    for (auto& [k, c] : *d) y[q.norm(concat(h, wpow(w, k)))] += c;
  }
  Coef x0;
  for (auto& [h, c] : y) x0[q.norm(concat(h, inverse(g1)))] += c;
  auto x = q.ncoef(x0);
  if (!q.ncoef(coef_sub(q.cmul(x, u), e)).empty()) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------- matrix state and moves

struct State {
  Mat M;
  std::vector<int> cols;  // original column labels still present
  std::vector<Poly> pivots;
};

void delete_rc(State& s, int i, int j) {
  s.M.erase(s.M.begin() + i);
  for (auto& r : s.M) r.erase(r.begin() + j);
  s.cols.erase(s.cols.begin() + j);
}

// shared by the engine and the replay: applies a move with formal arithmetic in the quotient
void apply(QuotientOracle& q, State& s, const Move& m) {
  switch (m.kind) {
    case Move::RowAdd:
      for (size_t c = 0; c < s.M[m.a].size(); ++c)
        if (!s.M[m.b][c].empty()) s.M[m.a][c] = trim(q, skew_add(s.M[m.a][c], skew_mul(q, m.q, s.M[m.b][c]), -1));
      break;
    case Move::RowScale:
      for (auto& e : s.M[m.a])
        if (!e.empty()) e = trim(q, skew_mul(q, m.q, e));
      break;
    case Move::ColAdd:
      for (auto& r : s.M)
        if (!r[m.b].empty()) r[m.a] = trim(q, skew_add(r[m.a], skew_mul(q, r[m.b], m.q), -1));
      break;
    case Move::ColScale:
      for (auto& r : s.M)
        if (!r[m.a].empty()) r[m.a] = trim(q, skew_mul(q, r[m.a], m.q));
      break;
    case Move::RowReplace:
      for (size_t c = 0; c < s.M[m.a].size(); ++c)
        if (trim(q, skew_mul(q, m.q, m.line[c])) != s.M[m.a][c])
          throw std::logic_error("row division does not multiply back");
      s.M[m.a] = m.line;
      break;
    case Move::ColReplace:
      for (size_t r = 0; r < s.M.size(); ++r)
        if (trim(q, skew_mul(q, m.line[r], m.q)) != s.M[r][m.a])
          throw std::logic_error("column division does not multiply back");
      for (size_t r = 0; r < s.M.size(); ++r) s.M[r][m.a] = m.line[r];
      break;
    case Move::TakePivot:
      s.pivots.push_back(s.M[m.a][m.b]);
      delete_rc(s, m.a, m.b);
      break;
    case Move::DropUnit:
      delete_rc(s, m.a, m.b);
      break;
    case Move::DropZeroRows: {
      Mat keep;
      for (auto& r : s.M) {
        bool any = false;
        for (auto& e : r) any |= !e.empty();
        if (any) keep.push_back(r);
      }
      s.M = keep;
      break;
    }
    case Move::DropColumn:
      for (auto& r : s.M) r.erase(r.begin() + m.a);
      s.cols.erase(s.cols.begin() + m.a);
      break;
  }
}

class Diag {
 public:
  Diag(QuotientOracle& q, State init, long budget) : q_(q), budget_(budget) { s_ = std::move(init); }

  State& state() { return s_; }
  std::vector<Move>& log() { return log_; }

  void move(Move m) {
    apply(q_, s_, m);
    log_.push_back(std::move(m));
    if (++moves_ > budget_) throw EngineError(fmt::format("move budget {} exceeded", budget_));
  }

  void row_op(int k, int i, Poly qq) { move({Move::RowAdd, k, i, std::move(qq), {}, ""}); }
  void row_scale(int k, const Coef& y) { move({Move::RowScale, k, k, Poly{{0, y}}, {}, ""}); }
  void col_op(int l, int j, Poly qq) { move({Move::ColAdd, l, j, std::move(qq), {}, ""}); }
  void col_scale(int l, const Coef& y) { move({Move::ColScale, l, l, Poly{{0, y}}, {}, ""}); }

  long measure() const {
    long m = 0;
    for (auto& r : s_.M)
      for (auto& f : r)
        if (!f.empty()) m += span(f) + 1;
    return m;
  }

  bool nonzero(const Coef& c) { return q_.verdict(c).kind == OracleVerdict::Nonzero; }

  bool drop_isolated_units() {
    auto& M = s_.M;
    for (size_t i = 0; i < M.size(); ++i)
      for (size_t j = 0; j < M[i].size(); ++j) {
        auto& f = M[i][j];
        if (f.size() != 1 || !nonzero(f.begin()->second)) continue;
        bool row_iso = true, col_iso = true;
        for (size_t l = 0; l < M[i].size(); ++l)
          if (l != j && !M[i][l].empty()) row_iso = false;
        for (size_t k = 0; k < M.size(); ++k)
          if (k != i && !M[k][j].empty()) col_iso = false;
        if (row_iso || col_iso) {
          move({Move::DropUnit, static_cast<int>(i), static_cast<int>(j), {}, {}, "drop isolated unit"});
          return true;
        }
      }
    return false;
  }

  void normalize_pivot(int i, int j) {
    auto f = s_.M[i][j];
    if (is_mono(f.rbegin()->second) || is_mono(f.begin()->second)) return;
    for (int e : {f.rbegin()->first, f.begin()->first}) {
      const Coef& u = f.at(e);
      if (u.size() != 2) continue;
      std::vector<Poly> line;
      bool ok = true;
      for (auto& g : s_.M[i]) {
        Poly h;
        for (auto& [m, c] : g) {
          auto x = left_divide(q_, u, c);
          if (!x) {
            ok = false;
            break;
          }
          if (!x->empty()) h[m] = *x;
        }
        if (!ok) break;
        line.push_back(trim(q_, h));
      }
      if (ok) {
        move({Move::RowReplace, i, i, Poly{{0, u}}, line, "left-divide row"});
        return;
      }
      line.clear();
      ok = true;
      for (auto& r : s_.M) {
        Poly h;
        for (auto& [m, c] : r[j]) {
          auto x = right_divide(q_, c, q_.calpha(u, m - e));
          if (!x) {
            ok = false;
            break;
          }
          if (!x->empty()) h[m] = *x;
        }
        if (!ok) break;
        line.push_back(trim(q_, h));
      }
      if (ok) {
        move({Move::ColReplace, j, j, Poly{{0, q_.calpha(u, -e)}}, line, "right-divide column"});
        return;
      }
    }
  }

  bool left_reduce(int k, int i, int j) {
    while (true) {
      auto a = s_.M[i][j], b = s_.M[k][j];
      if (b.empty() || span(b) < span(a)) return true;
      auto prev = std::make_pair(span(b), b.size());
      bool done = false;
      for (int end = 0; end < 2 && !done; ++end) {
        int eb = end == 0 ? b.rbegin()->first : b.begin()->first;
        int ea = end == 0 ? a.rbegin()->first : a.begin()->first;
        const Coef& bt = b.at(eb);
        const Coef& at = a.at(ea);
        int sh = eb - ea;
        if (!nonzero(at)) continue;
        auto ap = q_.calpha(at, sh);
        if (is_mono(ap)) {
          row_op(k, i, Poly{{sh, q_.cmul(bt, cinv_mono(ap))}});
          done = true;
        } else if (is_mono(bt)) {
          row_scale(k, q_.cmul(ap, cinv_mono(bt)));
          row_op(k, i, Poly{{sh, Coef{{Word{}, 1}}}});
          done = true;
        } else if (auto x = right_divide(q_, bt, ap)) {
          row_op(k, i, Poly{{sh, *x}});
          done = true;
        } else if (q_.cmul(ap, bt) == q_.cmul(bt, ap)) {
          row_scale(k, ap);
          row_op(k, i, Poly{{sh, bt}});
          done = true;
        }
      }
      auto& nb = s_.M[k][j];
      if (!nb.empty() && std::make_pair(span(nb), nb.size()) >= prev) return false;
      if (!done) return false;
    }
  }

  bool right_reduce(int l, int i, int j) {
    while (true) {
      auto a = s_.M[i][j], b = s_.M[i][l];
      if (b.empty() || span(b) < span(a)) return true;
      auto prev = std::make_pair(span(b), b.size());
      bool done = false;
      for (int end = 0; end < 2 && !done; ++end) {
        int eb = end == 0 ? b.rbegin()->first : b.begin()->first;
        int ea = end == 0 ? a.rbegin()->first : a.begin()->first;
        const Coef& bt = b.at(eb);
        const Coef& at = a.at(ea);
        int sh = eb - ea;
        if (!nonzero(at)) continue;
        if (is_mono(at)) {
          col_op(l, j, Poly{{sh, q_.calpha(q_.cmul(cinv_mono(at), bt), -ea)}});
          done = true;
        } else if (is_mono(bt)) {
          col_scale(l, q_.calpha(q_.cmul(cinv_mono(bt), at), -eb));
          col_op(l, j, Poly{{sh, Coef{{Word{}, 1}}}});
          done = true;
        } else if (auto x = left_divide(q_, at, bt)) {
          col_op(l, j, Poly{{sh, q_.calpha(*x, -ea)}});
          done = true;
        } else if (q_.cmul(at, bt) == q_.cmul(bt, at)) {
          col_scale(l, q_.calpha(at, -eb));
          col_op(l, j, Poly{{sh, q_.calpha(bt, -ea)}});
          done = true;
        }
      }
      auto& nb = s_.M[i][l];
      if (!nb.empty() && std::make_pair(span(nb), nb.size()) >= prev) return false;
      if (!done) return false;
    }
  }

  [[noreturn]] void split_on(const Coef& c) {
    auto f = q_.split_fact(c);
    if (!f) throw Stuck{};
    throw SplitNeeded{*f};
  }

  void run() {
    auto& M = s_.M;
    while (true) {
      bool has_zero_row = false;
      for (auto& r : M) {
        bool any = false;
        for (auto& e : r) any |= !e.empty();
        has_zero_row |= !any;
      }
      if (has_zero_row) move({Move::DropZeroRows, 0, 0, {}, {}, "drop zero rows"});
      if (M.empty()) break;
      if (drop_isolated_units()) continue;
      struct Cand {
        bool not_mono;
        int span;
        int i, j;
        bool operator<(const Cand& o) const {
          return std::tie(not_mono, span, i, j) < std::tie(o.not_mono, o.span, o.i, o.j);
        }
      };
      std::vector<Cand> cands;
      std::vector<std::pair<int, int>> unk;
      for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M[i].size(); ++j) {
          auto& f = M[i][j];
          if (f.empty()) continue;
          if (nonzero(f.rbegin()->second) && nonzero(f.begin()->second)) {
            bool mono = is_mono(f.rbegin()->second) || is_mono(f.begin()->second);
            cands.push_back({!mono, span(f), static_cast<int>(i), static_cast<int>(j)});
          } else {
            unk.emplace_back(i, j);
          }
        }
      if (cands.empty()) {
        auto [i, j] = unk.front();
        auto& f = M[i][j];
        const Coef& c = q_.verdict(f.rbegin()->second).kind == OracleVerdict::Unknown ? f.rbegin()->second
                                                                                     : f.begin()->second;
        split_on(c);
      }
      std::sort(cands.begin(), cands.end());
      bool progressed = false;
      for (int mode = 0; mode < 2 && !progressed; ++mode) {
        for (auto& cd : cands) {
          int i = cd.i, j = cd.j;
          State snap = s_;
          long snap_moves = moves_;
          size_t snap_log = log_.size();
          long before = measure();
          normalize_pivot(i, j);
          for (size_t k = 0; k < M.size(); ++k)
            if (static_cast<int>(k) != i && !M[k][j].empty()) left_reduce(static_cast<int>(k), i, j);
          for (size_t l = 0; l < M[i].size(); ++l)
            if (static_cast<int>(l) != j && !M[i][l].empty()) right_reduce(static_cast<int>(l), i, j);
          bool clear = true;
          for (size_t k = 0; k < M.size(); ++k)
            if (static_cast<int>(k) != i && !M[k][j].empty()) clear = false;
          for (size_t l = 0; l < M[i].size(); ++l)
            if (static_cast<int>(l) != j && !M[i][l].empty()) clear = false;
          if (clear) {
            move({Move::TakePivot, i, j, {}, {}, "pivot " + show_skew(q_.presentation(), M[i][j])});
            progressed = true;
            break;
          }
          if (mode == 1 && measure() < before) {
            progressed = true;
            break;
          }
          s_ = std::move(snap);
          moves_ = snap_moves;
          log_.resize(snap_log);
        }
      }
      if (!progressed) {
        for (auto& row : M)
          for (auto& f : row) {
            if (f.empty()) continue;
            for (auto* c : {&f.rbegin()->second, &f.begin()->second})
              if (q_.verdict(*c).kind == OracleVerdict::Unknown) split_on(*c);
          }
        throw Stuck{};
      }
    }
  }

 private:
  QuotientOracle& q_;
  State s_;
  std::vector<Move> log_;
  long moves_ = 0;
  long budget_;
};

Coef minus_one(const Word& w) {
  Coef c;
  c[w] += 1;
  c[Word{}] -= 1;
  return c;
}

struct StripOption {
  std::vector<Move> moves;
};

// drop one column using M * (x - 1) = 0
std::vector<StripOption> strip_options(QuotientOracle& q, const State& s) {
  auto& p = q.presentation();
  int g = p.ngens();
  std::vector<std::pair<Word, int>> data;
  for (int j = 0; j < g; ++j) data.push_back(q.tnormal(Word{j + 1}));
  std::vector<StripOption> out;
  for (int j = 0; j < g; ++j) {
    auto& [w, e] = data[j];
    if (e != 0) continue;
    auto c = q.ncoef(minus_one(w));
    if (!c.empty() && q.verdict(c).kind == OracleVerdict::Nonzero)
      out.push_back({{{Move::DropColumn, j, j, {}, {}, fmt::format("strip column {} ({}-1 is a unit)", p.generators[j], p.generators[j])}}});
  }
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k) {
      if (j == k || data[j].second != data[k].second || data[j].second == 0) continue;
      Word cw = q.norm(concat(data[k].first, inverse(data[j].first)));
      auto c = q.ncoef(minus_one(cw));
      if (c.empty() || q.verdict(c).kind != OracleVerdict::Nonzero) continue;
      StripOption o;
      o.moves.push_back({Move::ColAdd, j, k, Poly{{0, Coef{{cw, -1}}}}, {},
                         fmt::format("col {} += col {} * {}", p.generators[j], p.generators[k], p.compact(cw))});
      o.moves.push_back({Move::DropColumn, k, k, {}, {}, fmt::format("strip column {}", p.generators[k])});
      out.push_back(o);
    }
  (void)s;
  return out;
}

std::string describe(const Presentation& p, const Move& m) {
  if (!m.text.empty() && m.kind != Move::RowAdd && m.kind != Move::ColAdd) return m.text;
  switch (m.kind) {
    case Move::RowAdd:
      return fmt::format("R{} -= ({}) * R{}", m.a, show_skew(p, m.q), m.b);
    case Move::ColAdd:
      return m.text.empty() ? fmt::format("C{} -= C{} * ({})", m.a, m.b, show_skew(p, m.q)) : m.text;
    case Move::RowScale:
      return fmt::format("R{} <- ({}) * R{}", m.a, show_skew(p, m.q), m.a);
    case Move::ColScale:
      return fmt::format("C{} <- C{} * ({})", m.a, m.a, show_skew(p, m.q));
    default:
      return m.text;
  }
}

bool replay_matches(QuotientOracle& q, const State& init, const std::vector<Move>& log, const State& final_state) {
  State s = init;
  for (auto& m : log) apply(q, s, m);
  return s.M == final_state.M && s.cols == final_state.cols && s.pivots == final_state.pivots;
}

DeltaResult degree_rec(const Presentation& p, const SplittingChoice& sp, int level, const AssumptionLedger& ledger,
                       const EngineOptions& opt, int depth) {
  QuotientOracle q(p, sp, level, ledger, opt);
  DeltaResult res;
  res.assumptions = ledger.texts();
  if (p.relators.empty()) {
    int g = p.ngens();
    res.outcome = g > 1 ? DeltaResult::Infinite : DeltaResult::Finite;
    res.free_rank = g - 1;
    res.move_log.push_back("no relators: free group");
    return res;
  }
  State init;
  init.M = build_skew_matrix(q);
  for (auto& r : init.M)
    for (auto& e : r) e = trim(q, e);
  for (int j = 0; j < p.ngens(); ++j) init.cols.push_back(j);

  auto opts = strip_options(q, init);
  if (opts.size() > 4) opts.resize(4);
  opts.push_back({});  // unstripped fallback
  std::optional<Word> split;
  std::optional<State> stuck_state;
  for (auto& o : opts) {
    bool stripped = !o.moves.empty();
    Diag d(q, init, opt.move_budget);
    for (auto& m : o.moves) d.move(m);
    try {
      d.run();
    } catch (const Stuck&) {
      stuck_state = d.state();
      continue;
    } catch (const SplitNeeded& s) {
      split = s.fact;
      break;
    }
    auto& st = d.state();
    int free = static_cast<int>(st.cols.size()) - (stripped ? 0 : 1);
    if (free < 0) throw EngineError("no free summand left for the basepoint");
    res.replayed_runs = 1;
    res.replay_ok = replay_matches(q, init, d.log(), st);
    for (auto& m : d.log()) res.move_log.push_back(describe(p, m));
    if (free > 0) {
      res.outcome = DeltaResult::Infinite;
      res.free_rank = free;
    } else {
      res.outcome = DeltaResult::Finite;
      for (auto& f : st.pivots) {
        int s = span(f);
        if (s > 0) res.spans.push_back(s);
        res.value += s;
      }
    }
    res.certificates.assign(q.certificates_used.begin(), q.certificates_used.end());
    return res;
  }
  res.certificates.assign(q.certificates_used.begin(), q.certificates_used.end());
  if (!split) {
    res.outcome = DeltaResult::Inconclusive;
    std::string m;
    if (stuck_state)
      for (auto& r : stuck_state->M) {
        m += "[";
        for (size_t c = 0; c < r.size(); ++c) m += (c ? ", " : "") + show_skew(p, r[c]);
        m += "]";
      }
    res.blocking = "no certified pivot: " + m;
    return res;
  }
  std::string w = p.show(*split);
  if (depth >= opt.max_depth) {
    res.outcome = DeltaResult::Inconclusive;
    res.blocking = fmt::format("undecided whether {} = 1 at level {}", w, level);
    return res;
  }
  AssumptionLedger eq = ledger, ne = ledger;
  std::string eqs = fmt::format("{}=1@{}", w, level), nes = fmt::format("{}!=1@{}", w, level);
  eq.add(Fact{Fact::Eq, *split, level, eqs});
  ne.add(Fact{Fact::Ne, *split, level, nes});
  auto a = degree_rec(p, sp, level, eq, opt, depth + 1);
  auto b = degree_rec(p, sp, level, ne, opt, depth + 1);
  if (a.signature() == b.signature()) {
    a.assumptions = ledger.texts();
    a.move_log.insert(a.move_log.begin(), fmt::format("case split on {}: both branches agree", w));
    for (auto& c : b.certificates)
      if (std::find(a.certificates.begin(), a.certificates.end(), c) == a.certificates.end()) a.certificates.push_back(c);
    a.replay_ok = a.replay_ok && b.replay_ok;
    a.replayed_runs += b.replayed_runs;
    return a;
  }
  res.outcome = DeltaResult::Conditional;
  res.replay_ok = a.replay_ok && b.replay_ok;
  res.replayed_runs = a.replayed_runs + b.replayed_runs;
  res.branches.push_back({eqs, std::move(a)});
  res.branches.push_back({nes, std::move(b)});
  return res;
}

}  // namespace

std::string DeltaResult::signature() const {
  switch (outcome) {
    case Finite:
      return fmt::format("finite:{}", value);
    case Infinite:
      return fmt::format("infinite:{}", free_rank);
    case Inconclusive:
      return "inconclusive";
    case Conditional: {
      std::string s = "conditional[";
      for (auto& b : branches) s += b.assumption + "->" + b.result.signature() + ";";
      return s + "]";
    }
  }
  return "";
}

DeltaResult higher_order_degree(const Presentation& p, const SplittingChoice& s, int level,
                                const AssumptionLedger& ledger, const EngineOptions& opt) {
  if (!p.has_linking()) throw InputError("linking data (lk:) required");
  if (!p.primitive()) throw InputError("linking map is not primitive");
  return degree_rec(p, s, level, ledger, opt, 0);
}

}  // namespace alexinvar
