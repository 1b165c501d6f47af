#include <fmt/format.h>

#include <cstdlib>
#include <numeric>
#include <regex>

#include "alexinvar/higher_order.hpp"
#include "rws.hpp"

namespace alexinvar {

// ---------------------------------------------------------------- ledger

void AssumptionLedger::add(const Presentation& p, const std::string& spec) {
  static const std::regex eq(R"(^\s*(.+?)\s*=\s*1\s*@\s*(\d+)\s*$)");
  static const std::regex ne(R"(^\s*(.+?)\s*!=\s*1\s*@\s*(\d+)\s*$)");
  static const std::regex in(R"(^\s*(.+?)\s+in\s+G\s*\(\s*(\d+)\s*\)\s*$)");
  static const std::regex notin(R"(^\s*(.+?)\s+notin\s+G\s*\(\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  Fact f;
  if (std::regex_match(spec, m, ne)) {
    f = {Fact::Ne, p.parse_word(m[1]), std::stoi(m[2]), spec};
  } else if (std::regex_match(spec, m, eq)) {
    f = {Fact::Eq, p.parse_word(m[1]), std::stoi(m[2]), spec};
  } else if (std::regex_match(spec, m, notin)) {
    int k = std::stoi(m[2]);
    if (k < 1) throw InputError("G(k) needs k >= 1");
    // w outside G^(k) means w != 1 in G/G^(k), the quotient at level k-1
    f = {Fact::Ne, p.parse_word(m[1]), k - 1, spec};
  } else if (std::regex_match(spec, m, in)) {
    int k = std::stoi(m[2]);
    if (k < 1) throw InputError("G(k) needs k >= 1");
    f = {Fact::Eq, p.parse_word(m[1]), k - 1, spec};
  } else {
    throw InputError(fmt::format("cannot parse assumption '{}'", spec));
  }
  if (p.has_linking() && p.psi(f.w) != 0)
    throw InputError(fmt::format("assumption word in '{}' has nonzero linking number", spec));
  add(f);
}

void AssumptionLedger::add(Fact f) {
  if (f.w.empty() && f.kind == Fact::Ne) throw InputError("the identity cannot be declared nontrivial");
  for (auto& g : facts_) {
    bool same = g.w == f.w || g.w == inverse(f.w);
    if (!same || g.kind == f.kind) continue;
    auto& e = f.kind == Fact::Eq ? f : g;
    auto& n = f.kind == Fact::Ne ? f : g;
    if (n.level <= e.level)
      throw InputError(fmt::format("contradictory assumptions '{}' and '{}'", g.text, f.text));
  }
  facts_.push_back(std::move(f));
}

std::vector<std::string> AssumptionLedger::texts() const {
  std::vector<std::string> out;
  for (auto& f : facts_) out.push_back(f.text);
  return out;
}

OracleMode parse_oracle_mode(const std::string& s) {
  if (s == "auto") return OracleMode::Auto;
  if (s == "abelian") return OracleMode::Abelian;
  if (s == "evaluation") return OracleMode::Evaluation;
  if (s == "metabelian") return OracleMode::Metabelian;
  throw InputError(fmt::format("unknown oracle '{}'", s));
}

long EngineOptions::budget_from_env(long fallback) {
  const char* v = std::getenv("ALEXINVAR_MOVE_BUDGET");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long b = std::strtol(v, &end, 10);
  if (*end || b <= 0) throw InputError("ALEXINVAR_MOVE_BUDGET must be a positive integer");
  return b;
}

// ---------------------------------------------------------------- metabelian data

namespace {

QLaurent canon_rem(QLaurent f, const QLaurent& p) {
  int d = p.hi();
  if (d == 0) return QLaurent();
  while (!f.is_zero() && (f.hi() >= d || f.lo() < 0)) {
    if (f.hi() >= d)
      f = f - p.shifted(f.hi() - d).scaled(f.top());
    else
      f = f - p.shifted(f.lo()).scaled(f.bottom() / p.coeff(0));
  }
  return f;
}

using Row = std::vector<QLaurent>;

std::vector<std::pair<int, Row>> hermite(std::vector<Row> rows, int ncols) {
  auto nonzero = [](const Row& r) {
    for (auto& e : r)
      if (!e.is_zero()) return true;
    return false;
  };
  std::vector<Row> live;
  for (auto& r : rows)
    if (nonzero(r)) live.push_back(r);
  std::vector<std::pair<int, Row>> out;
  for (int col = 0; !live.empty() && col < ncols; ++col) {
    std::vector<size_t> nz;
    for (size_t i = 0; i < live.size(); ++i)
      if (!live[i][col].is_zero()) nz.push_back(i);
    if (nz.empty()) continue;
    while (true) {
      nz.clear();
      for (size_t i = 0; i < live.size(); ++i)
        if (!live[i][col].is_zero()) nz.push_back(i);
      if (nz.size() == 1) break;
      std::stable_sort(nz.begin(), nz.end(), [&](size_t a, size_t b) { return live[a][col].span() < live[b][col].span(); });
      auto& piv = live[nz[0]];
      for (size_t k = 1; k < nz.size(); ++k) {
        auto& r = live[nz[k]];
        auto q = r[col].divmod(piv[col]).first;
        for (int j = 0; j < ncols; ++j) r[j] = r[j] - q * piv[j];
      }
    }
    Row piv = live[nz[0]];
    auto e = piv[col];
    Rational c = 1 / e.top();
    for (auto& x : piv) x = x.shifted(-e.lo()).scaled(c);
    std::vector<Row> rest;
    for (size_t i = 0; i < live.size(); ++i)
      if (i != nz[0] && nonzero(live[i])) rest.push_back(live[i]);
    live = rest;
    out.emplace_back(col, piv);
  }
  return out;
}

std::string laurent_key(const QLaurent& f) {
  std::string s = fmt::format("{}:", f.lo());
  for (auto& c : f.coeffs()) s += c.get_str() + ",";
  return s;
}

}  // namespace

struct QuotientOracle::Meta {
  std::vector<Rational> spec;  // constants for the non-linking coordinates; empty when b1 = 1
  std::vector<std::pair<int, Row>> H;
  std::unordered_map<Word, std::string, WordHash> keys;
};

// ---------------------------------------------------------------- oracle

QuotientOracle::QuotientOracle(const Presentation& p, const SplittingChoice& s, int level,
                               const AssumptionLedger& ledger, const EngineOptions& opt)
    : p_(p), split_(s.section_word), split_inv_(inverse(s.section_word)), level_(level), opt_(opt) {
  if (level < 0) throw InputError("level must be non-negative");
  if (p.psi(split_) != 1) throw InputError("splitting word must have linking number 1");
  H_ = hom_basis(p);
  std::vector<Word> extra;
  std::vector<Word> eqs;
  for (auto& f : ledger.facts()) {
    if (f.kind == Fact::Eq && f.level >= level) {
      eqs.push_back(f.w);
      declared_.push_back(f.w);
      if (f.w.size() == 1)
        kills_.insert(std::abs(f.w[0]));
      else
        extra.push_back(f.w);
    }
    if (f.kind == Fact::Ne && f.level <= level) {
      distinct_.push_back(f.w);
      declared_.push_back(f.w);
    }
  }
  bool meta_allowed = opt.mode == OracleMode::Auto || opt.mode == OracleMode::Metabelian;
  exact_ = level == 0 || (level == 1 && H_.size() == 1 && meta_allowed);
  use_meta_ = level >= 1 && meta_allowed;
  if (use_meta_) {
    std::vector<std::vector<Rational>> specs;
    if (H_.size() == 1) {
      specs.push_back({});
    } else {
      static const long a[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
      static const Rational b[] = {Rational(1, 3), 5, Rational(2, 7), 3, 7, 2, 11, 13, 5, 3, 2};
      std::vector<Rational> s1, s2;
      for (size_t i = 0; i + 1 < H_.size(); ++i) {
        s1.emplace_back(a[i % 11]);
        s2.push_back(b[i % 11]);
      }
      specs = {s1, s2};
    }
    for (auto& sp : specs) {
      auto m = std::make_shared<Meta>();
      m->spec = sp;
      meta_.push_back(m);
      std::vector<Row> rows;
      for (auto& r : p.relators) {
        Row row;
        for (int j = 0; j < p.ngens(); ++j) {
          QLaurent acc;
          for (auto& [u, n] : fox_derivative(r, j)) {
            auto e = key0(u);
            Rational coef(static_cast<long>(n));
            for (size_t k = 1; k < e.size(); ++k) {
              mpq_class base = sp[k - 1];
              mpq_class pw = 1;
              long ex = std::abs(e[k]);
              for (long t = 0; t < ex; ++t) pw *= base;
              coef *= e[k] >= 0 ? pw : 1 / pw;
            }
            acc = acc + QLaurent::monomial({}, static_cast<int>(e[0]), coef);
          }
          row.push_back(acc);
        }
        rows.push_back(row);
      }
      m->H = hermite(rows, p.ngens());
    }
  }
  if (exact_) {
    // declared facts are checked, not assumed, where normal forms are exact
    for (auto& w : eqs)
      if (norm(w) != norm(Word{}))
        throw InputError(fmt::format("assumption {}=1 contradicts the exact normal form at level {}", p.show(w), level));
    for (auto& w : distinct_)
      if (norm(w) == norm(Word{}))
        throw InputError(fmt::format("assumption {}!=1 contradicts the exact normal form at level {}", p.show(w), level));
  } else {
    std::vector<Word> rels;
    for (auto& r : p.relators) {
      auto k = kill(r);
      if (!k.empty()) rels.push_back(k);
    }
    for (auto& w : extra) {
      auto k = kill(w);
      if (!k.empty()) rels.push_back(k);
    }
    rws_ = std::make_unique<RewriteSystem>(rels, opt.kb_max_rules, opt.kb_max_len, opt.kb_rounds);
  }
}

QuotientOracle::~QuotientOracle() = default;

Word QuotientOracle::kill(const Word& w) const {
  if (kills_.empty()) return w;
  Word r;
  for (int x : w)
    if (!kills_.count(std::abs(x))) r.push_back(x);
  return free_reduce(r);
}

void QuotientOracle::guard(const Word& w) const {
  if (w.size() > opt_.word_guard)
    throw EngineError(fmt::format("word length {} exceeds guard {}", w.size(), opt_.word_guard));
}

std::vector<long long> QuotientOracle::key0(const Word& w) const {
  auto a = abelianize(w, p_);
  std::vector<long long> k;
  for (auto& h : H_) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += h[i] * a[i];
    k.push_back(s);
  }
  return k;
}

std::string QuotientOracle::key1(const Word& w, size_t idx) {
  auto& m = *meta_[idx];
  auto hit = m.keys.find(w);
  if (hit != m.keys.end()) return hit->second;
  Row v;
  for (int j = 0; j < p_.ngens(); ++j) {
    QLaurent acc;
    for (auto& [u, n] : fox_derivative(w, j)) {
      auto e = key0(u);
      Rational coef(static_cast<long>(n));
      for (size_t k = 1; k < e.size(); ++k) {
        mpq_class pw = 1;
        for (long t = 0; t < std::abs(e[k]); ++t) pw *= m.spec[k - 1];
        coef *= e[k] >= 0 ? pw : 1 / pw;
      }
      acc = acc + QLaurent::monomial({}, static_cast<int>(e[0]), coef);
    }
    v.push_back(acc);
  }
  for (auto& [col, row] : m.H) {
    auto& piv = row[col];
    auto r = canon_rem(v[col], piv);
    auto diff = v[col] - r;
    if (!diff.is_zero()) {
      auto q = diff.exact_div(piv);
      if (!q) throw std::logic_error("canonical remainder not exact");
      for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - *q * row[j];
    }
  }
  std::string key;
  for (auto& x : v) key += laurent_key(x) + "|";
  m.keys.emplace(w, key);
  return key;
}

Word QuotientOracle::norm(const Word& w0) {
  Word w = free_reduce(w0);
  guard(w);
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  Word out;
  if (exact_) {
    std::string k;
    for (auto x : key0(w)) k += std::to_string(x) + ",";
    if (level_ >= 1) k += "/" + key1(w, 0);
    auto [rit, ins] = reps_.try_emplace(k, w);
    out = rit->second;
  } else {
    out = rws_->reduce(kill(w));
  }
  cache_.emplace(w, out);
  return out;
}

Coef QuotientOracle::ncoef(const Coef& c) {
  Coef out;
  for (auto& [w, v] : c) {
    auto& slot = out[norm(w)];
    slot += v;
  }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Word QuotientOracle::alpha(const Word& w, int k) {
  Word sk = power(split_, k);
  return norm(concat(concat(sk, w), inverse(sk)));
}

Coef QuotientOracle::cmul(const Coef& a, const Coef& b) {
  Coef out;
  for (auto& [u, x] : a)
    for (auto& [v, y] : b) out[norm(concat(u, v))] += x * y;
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Coef QuotientOracle::calpha(const Coef& a, int k) {
  if (k == 0) return a;
  Coef out;
  for (auto& [u, x] : a) out[alpha(u, k)] += x;
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::pair<Word, int> QuotientOracle::tnormal(const Word& w) {
  int e = static_cast<int>(p_.psi(w));
  return {norm(concat(w, power(split_, -e))), e};
}

std::optional<std::string> QuotientOracle::distinct_pair(const Word& u, const Word& v) {
  if (key0(u) != key0(v)) return "abelian";
  if (use_meta_)
    for (size_t i = 0; i < meta_.size(); ++i)
      if (key1(u, i) != key1(v, i)) return "metabelian";
  Word d = norm(concat(u, inverse(v)));
  for (auto& f : distinct_)
    if (d == norm(f) || d == norm(inverse(f))) return "ledger";
  return std::nullopt;
}

OracleVerdict QuotientOracle::verdict(const Coef& c) {
  auto done = [&](OracleVerdict::Kind k, std::string cert) {
    if (k != OracleVerdict::Unknown) certificates_used.insert(cert);
    return OracleVerdict{k, std::move(cert)};
  };
  if (c.empty()) return done(OracleVerdict::Zero, "syntactic");
  Rational total = 0;
  for (auto& [w, v] : c) total += v;
  if (sgn(total) != 0) return done(OracleVerdict::Nonzero, "augmentation");
  if (exact_) return done(OracleVerdict::Nonzero, level_ == 0 ? "evaluation" : "metabelian-normal-form");
  std::vector<Word> ws;
  for (auto& [w, v] : c) ws.push_back(w);
  size_t n = ws.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  std::set<std::string> reasons;
  std::vector<std::vector<std::optional<std::string>>> why(n, std::vector<std::optional<std::string>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      why[i][j] = distinct_pair(ws[i], ws[j]);
      if (!why[i][j]) parent[find(i)] = find(j);
    }
  std::map<size_t, Rational> sums;
  for (size_t i = 0; i < n; ++i) sums[find(i)] += c.at(ws[i]);
  for (auto& [root, s] : sums)
    if (sgn(s) != 0) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (why[i][j] && find(i) != find(j)) reasons.insert(*why[i][j]);
      if (reasons.count("ledger")) return done(OracleVerdict::Nonzero, "declared-assumption");
      if (reasons.count("metabelian"))
        return done(OracleVerdict::Nonzero, betti() == 1 ? "metabelian-normal-form" : "partition");
      return done(OracleVerdict::Nonzero, "abelian-character");
    }
  return {OracleVerdict::Unknown, ""};
}

std::optional<Word> QuotientOracle::split_fact(const Coef& c) {
  std::vector<Word> ws;
  for (auto& [w, v] : c) ws.push_back(w);
  std::stable_sort(ws.begin(), ws.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j)
      if (!distinct_pair(ws[i], ws[j])) {
        Word d = norm(concat(ws[j], inverse(ws[i])));
        bool known = d.empty();
        for (auto& w : declared_) {
          Word nw = norm(w);
          known |= nw == d || nw == norm(inverse(d)) || w == d || w == inverse(d);
        }
        // a declared fact the normalizer cannot exploit gives no new branch
        if (!known) return d;
      }
  return std::nullopt;
}

OracleVerdict certify(const Coef& c, int level, const Presentation& p, const AssumptionLedger& ledger,
                      const SplittingChoice& s, const EngineOptions& opt) {
  QuotientOracle q(p, s, level, ledger, opt);
  return q.verdict(q.ncoef(c));
}

}  // namespace alexinvar
