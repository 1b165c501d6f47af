#include <fmt/format.h>

#include "alexinvar/higher_order.hpp"

namespace alexinvar {

namespace {

void coef_add(Coef& into, const Coef& c, int sign = 1) {
  for (auto& [w, v] : c) {
    auto& slot = into[w];
    if (sign > 0)
      slot += v;
    else
      slot -= v;
    if (sgn(slot) == 0) into.erase(w);
  }
}

}  // namespace

SkewLaurentPoly skew_add(const SkewLaurentPoly& f, const SkewLaurentPoly& g, int sign) {
  SkewLaurentPoly out = f;
  for (auto& [k, c] : g) {
    auto& slot = out[k];
    coef_add(slot, c, sign);
    if (slot.empty()) out.erase(k);
  }
  return out;
}

SkewLaurentPoly skew_mul(QuotientOracle& q, const SkewLaurentPoly& f, const SkewLaurentPoly& g) {
  SkewLaurentPoly out;
  for (auto& [i, a] : f)
    for (auto& [j, b] : g) {
      auto prod = q.cmul(a, q.calpha(b, i));
      if (prod.empty()) continue;
      auto& slot = out[i + j];
      coef_add(slot, prod);
      if (slot.empty()) out.erase(i + j);
    }
  return out;
}

SkewLaurentPoly skew_mul_formal(const SkewLaurentPoly& f, const SkewLaurentPoly& g, const Word& split) {
  SkewLaurentPoly out;
  for (auto& [i, a] : f)
    for (auto& [j, b] : g) {
      Word si = power(split, i), sinv = inverse(si);
      Coef prod;
      for (auto& [u, x] : a)
        for (auto& [v, y] : b) {
          Word w = concat(concat(concat(u, si), v), sinv);
          prod[w] += x * y;
        }
      auto& slot = out[i + j];
      coef_add(slot, prod);
      if (slot.empty()) out.erase(i + j);
    }
  return out;
}

std::string show_coef(const Presentation& p, const Coef& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, v] : c) {
    bool neg = sgn(v) < 0;
    Rational a = abs(v);
    std::string body = p.compact(w);
    if (a != 1) body = (w.empty() ? rat_str(a) : rat_str(a) + "*" + body);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    s += body;
    first = false;
  }
  return s;
}

std::string show_skew(const Presentation& p, const SkewLaurentPoly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (auto& [k, c] : f) {
    if (!s.empty()) s += " + ";
    s += "(" + show_coef(p, c) + ")";
    if (k != 0) s += k == 1 ? "t" : fmt::format("t^{}", k);
  }
  return s;
}

SkewMatrix build_skew_matrix(QuotientOracle& q) {
  auto& p = q.presentation();
  SkewMatrix M;
  for (auto& r : p.relators) {
    std::vector<SkewLaurentPoly> row;
    for (int j = 1; j <= p.ngens(); ++j) {
      SkewLaurentPoly entry;
      for (size_t i = 0; i < r.size(); ++i) {
        if (std::abs(r[i]) != j) continue;
        size_t cut = r[i] > 0 ? i : i + 1;
        int sign = r[i] > 0 ? 1 : -1;
        // the prefix equals the inverse of the remaining suffix, since r = 1
        Word pre = free_reduce(Word(r.begin(), r.begin() + cut));
        Word alt = inverse(free_reduce(Word(r.begin() + cut, r.end())));
        Word w = pre.size() <= alt.size() ? pre : alt;
        auto [k, e] = q.tnormal(w);
        entry = skew_add(entry, SkewLaurentPoly{{e, Coef{{k, Rational(sign)}}}});
      }
      row.push_back(entry);
    }
    M.push_back(row);
  }
  return M;
}

}  // namespace alexinvar
