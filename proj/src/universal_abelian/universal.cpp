#include "alexinvar/universal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <regex>
#include <cmath>
#include <set>
#include <sstream>

#include "alexinvar/alexander.hpp"

namespace alexinvar {

namespace {

std::vector<std::vector<long long>> parse_ab(const Presentation& p) {
  std::vector<std::vector<long long>> rows(p.ngens());
  static const std::regex item(R"((\w+)\s*=\s*\(([^)]*)\))");
  bool any = false;
  for (auto& [tag, body] : p.extras) {
    if (tag != "ab") continue;
    any = true;
    for (std::sregex_iterator it(body.begin(), body.end(), item), end; it != end; ++it) {
      int g = p.index_of((*it)[1]);
      if (g < 0) throw InputError("ab: unknown generator " + std::string((*it)[1]));
      std::vector<long long> v;
      std::string list = (*it)[2];
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream in(list);
      long long x;
      while (in >> x) v.push_back(x);
      rows[g] = v;
    }
  }
  if (!any) return {};
  size_t s = 0;
  for (auto& r : rows) s = std::max(s, r.size());
  for (size_t g = 0; g < rows.size(); ++g)
    if (rows[g].size() != s) throw InputError("ab: missing or short row for " + p.generators[g]);
  return rows;
}

std::vector<long long> image(const std::vector<std::vector<long long>>& map, const Word& w) {
  std::vector<long long> v(map.empty() ? 0 : map[0].size(), 0);
  for (int x : w) {
    auto& r = map[std::abs(x) - 1];
    for (size_t i = 0; i < v.size(); ++i) v[i] += x > 0 ? r[i] : -r[i];
  }
  return v;
}

bool kills_relators(const Presentation& p, const std::vector<std::vector<long long>>& map) {
  for (auto& r : p.relators)
    for (auto x : image(map, r))
      if (x) return false;
  return true;
}

}  // namespace

std::vector<std::vector<long long>> component_map(const Presentation& p) {
  auto map = parse_ab(p);
  if (!map.empty()) {
    if (!kills_relators(p, map)) throw InputError("ab: map does not vanish on the relators");
    return map;
  }
  int g = p.ngens();
  map.assign(g, std::vector<long long>(g, 0));
  for (int i = 0; i < g; ++i) map[i][i] = 1;
  if (kills_relators(p, map)) return map;
  auto H = hom_basis(p);  // rows: homomorphisms, columns: generators
  map.assign(g, std::vector<long long>(H.size(), 0));
  for (size_t k = 0; k < H.size(); ++k)
    for (int i = 0; i < g; ++i) map[i][k] = H[k][i];
  return map;
}

MultiMatrix multivariable_matrix(const Presentation& p) {
  auto map = component_map(p);
  int s = map.empty() ? 0 : static_cast<int>(map[0].size());
  MultiMatrix M;
  for (auto& row : fox_matrix(p)) {
    std::vector<MultiLaurentPoly> r;
    for (auto& e : row) {
      MultiLaurentPoly acc(s);
      for (auto& [w, c] : e) {
        auto v = image(map, w);
        acc = acc + MultiLaurentPoly::monomial(std::vector<int>(v.begin(), v.end()), Rational(static_cast<long>(c)));
      }
      r.push_back(acc);
    }
    M.push_back(r);
  }
  return M;
}

IdealData order_ideal(const MultiMatrix& M, int i, int ngens, int arity) {
  IdealData I;
  I.arity = arity;
  I.index = i;
  I.gcd = MultiLaurentPoly(arity);
  int k = ngens - 1 - i;
  if (k <= 0) {
    I.unit_ideal = true;
    I.gcd = MultiLaurentPoly::constant(arity, 1);
    return I;
  }
  if (k > static_cast<int>(M.size())) return I;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, MultiLaurentPoly>> gens;
  for (auto& m : minors(M, k, ngens)) {
    if (m.is_zero()) continue;
    auto u = m.unit_normal();
    auto key = u.to_string();
    if (seen.insert(key).second) gens.emplace_back(key, u);
  }
  std::sort(gens.begin(), gens.end(), [](auto& a, auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  for (auto& [key, g] : gens) {
    I.gcd = I.gcd.is_zero() ? g : multi_gcd(I.gcd, g);
    if (g.is_unit()) I.unit_ideal = true;
    I.generators.push_back(g);
  }
  if (!I.gcd.is_zero()) I.gcd = I.gcd.unit_normal();
  return I;
}

std::vector<CyclotomicValue> CharacterPoint::values() const {
  std::vector<CyclotomicValue> v;
  for (long k : exponents) v.push_back(CyclotomicValue::zeta_power(order, k));
  return v;
}

bool CharacterPoint::trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [&](long k) { return k % order == 0; });
}

std::string CharacterPoint::to_string() const {
  std::vector<std::string> parts;
  for (auto& v : values()) parts.push_back(v.to_string());
  return "(" + fmt::format("{}", fmt::join(parts, ", ")) + ")";
}

CharacterPoint parse_character(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*:\s*(-?\d+(\s*,\s*-?\d+)*)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("character must look like N:k1,k2,...: " + text);
  CharacterPoint c;
  c.order = std::stoi(m[1]);
  if (c.order < 1) throw InputError("character order must be positive");
  std::string list = m[2];
  std::replace(list.begin(), list.end(), ',', ' ');
  std::istringstream in(list);
  long k;
  while (in >> k) c.exponents.push_back(((k % c.order) + c.order) % c.order);
  return c;
}

bool support_member(const IdealData& I, const CharacterPoint& lambda) {
  if (static_cast<int>(lambda.exponents.size()) != I.arity)
    throw InputError(fmt::format("character has {} entries, ring has {} variables", lambda.exponents.size(), I.arity));
  if (I.unit_ideal) return false;
  auto vals = lambda.values();
  for (auto& g : I.generators)
    if (!eval_at_character(g, vals).is_zero()) return false;
  return true;
}

ContainmentReport verify_support_containment(const IdealData& I, const std::vector<int>& degrees, int d, long budget) {
  if (static_cast<int>(degrees.size()) != I.arity)
    throw InputError(fmt::format("{} component degrees for {} variables", degrees.size(), I.arity));
  if (std::accumulate(degrees.begin(), degrees.end(), 0) != d)
    throw InputError("total degree must be the sum of the component degrees");
  if (d < 1) throw InputError("total degree must be positive");
  double points = std::pow(static_cast<double>(d), I.arity);
  if (points > static_cast<double>(budget))
    throw InputError(fmt::format("{}^{} points exceed the enumeration budget {}", d, I.arity, budget));
  ContainmentReport r;
  r.scope = fmt::format(
      "checked on the {} torsion points of order {} only; this certifies containment at those points, not on the "
      "whole torus",
      static_cast<long>(points), d);
  CharacterPoint pt;
  pt.order = d;
  pt.exponents.assign(I.arity, 0);
  while (true) {
    ++r.scanned;
    if (support_member(I, pt)) {
      r.support.push_back(pt);
      long e = 0;
      for (size_t j = 0; j < degrees.size(); ++j) e += pt.exponents[j] * degrees[j];
      if (e % d != 0) {
        r.counterexamples.push_back(pt);
        r.holds = false;
      }
    }
    size_t j = 0;
    while (j < pt.exponents.size() && ++pt.exponents[j] == d) pt.exponents[j++] = 0;
    if (j == pt.exponents.size()) break;
  }
  return r;
}

int local_system_h1_dim(const Presentation& p, const CharacterPoint& lambda) {
  if (lambda.trivial()) throw InputError("the trivial character is excluded");
  auto M = multivariable_matrix(p);
  auto map = component_map(p);
  int s = map.empty() ? 0 : static_cast<int>(map[0].size());
  if (static_cast<int>(lambda.exponents.size()) != s)
    throw InputError(fmt::format("character has {} entries, ring has {} variables", lambda.exponents.size(), s));
  auto vals = lambda.values();
  std::vector<std::vector<CyclotomicValue>> E;
  for (auto& row : M) {
    std::vector<CyclotomicValue> r;
    for (auto& e : row) r.push_back(eval_at_character(e, vals));
    E.push_back(r);
  }
  return p.ngens() - 1 - rank_cyclotomic(E);
}

}  // namespace alexinvar
