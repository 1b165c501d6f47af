#include "alexinvar/catalog.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace alexinvar {

namespace {

std::string gens_line(const std::vector<std::string>& g) { return "gens: " + fmt::format("{}", fmt::join(g, " ")) + "\n"; }

std::string lk_line(const std::vector<std::string>& g, const std::vector<int>& lk) {
  std::string s = "lk:";
  for (size_t i = 0; i < g.size(); ++i) s += fmt::format(" {}={}", g[i], lk[i]);
  return s + "\n";
}

std::string alternating(const char* x, const char* y, int m) {
  std::string s;
  for (int i = 0; i < m; ++i) s += std::string(i ? " " : "") + (i % 2 ? y : x);
  return s;
}

// local Alexander polynomial of an ordinary m-fold point: (t-1)(t^m-1)^(m-2)
std::string ordinary_point(int m) {
  QLaurent f = qpoly({-1, 1});
  QLaurent g = QLaurent::monomial({}, m, 1) - qpoly({1});
  for (int i = 0; i < m - 2; ++i) f = f * g;
  return f.to_string();
}

Expectation E(int level, bool above, std::string v, std::string prov) { return {level, above, std::move(v), std::move(prov)}; }

CatalogEntry finish(CatalogEntry e) {
  e.presentation = parse_presentation(e.text);
  e.presentation.validate();
  e.curve = curve_data_from(e.presentation);
  if (e.split.empty()) {
    auto s = default_splitting(e.presentation);
    if (s) e.split = e.presentation.show(*s);
  }
  return e;
}

CatalogEntry pencil(int m) {
  if (m < 2 || m > 8) throw InputError("pencil size must be in [2, 8]");
  std::vector<std::string> g{"a"};
  for (int i = 1; i < m; ++i) g.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::string> sig{"a"};
  for (int i = 1; i < m; ++i) sig.push_back(g[i] + " a");
  std::vector<std::string> shifts;
  for (int i = 0; i < m; ++i) {
    std::string s;
    for (int k = 0; k < m; ++k) s += (k ? " " : "") + sig[(i + k) % m];
    shifts.push_back(s);
  }
  CatalogEntry e;
  e.name = fmt::format("pencil{}", m);
  e.params = {m};
  e.text = gens_line(g) + "rel: " + fmt::format("{}", fmt::join(shifts, " = ")) + "\n";
  std::vector<int> lk(m, 0);
  lk[0] = 1;
  e.text += lk_line(g, lk);
  std::string ab = "ab:";
  for (int i = 0; i < m; ++i) {
    std::vector<int> v(m, 0);
    if (i == 0) {
      v[0] = 1;
    } else {
      v[0] = -1;
      v[i] = 1;
    }
    ab += fmt::format(" {}=({})", g[i], fmt::join(v, ","));
  }
  e.text += ab + "\n";
  e.text += "degrees:";
  for (int i = 0; i < m; ++i) e.text += " 1";
  e.text += fmt::format("\nsing: p{} mu={} branches={} delta={}\ngenus: 0\n", m, (m - 1) * (m - 1), m, ordinary_point(m));
  std::string prov = m >= 3 && m <= 5 ? "stated" : "derived";
  e.delta = {E(0, true, std::to_string(m * (m - 2)), prov)};
  e.note = m <= 5 ? "m concurrent lines" : "m concurrent lines; the value m(m-2) is only conjectured for this m";
  return finish(e);
}

CatalogEntry node_added() {
  CatalogEntry e;
  e.name = "node-added";
  e.text =
      "gens: a b c d\n"
      "rel: a b a c = b a c a = c a a b\n"
      "rel: d a a = a d a\nrel: d a b a = b a d a\nrel: d a c a = c a d a\n"
      "lk: a=1 b=0 c=0 d=0\n"
      "ab: a=(1,0,0,0) b=(-1,1,0,0) c=(-1,0,1,0) d=(-1,0,0,1)\n"
      "degrees: 1 1 1 1\n";
  e.text += fmt::format("sing: p3 mu=4 branches=3 delta={}\n", ordinary_point(3));
  for (int i = 1; i <= 3; ++i) e.text += fmt::format("sing: n{} mu=1 branches=2 delta={}\n", i, ordinary_point(2));
  e.text += "genus: 0\n";
  e.delta = {E(0, true, "0", "stated")};
  e.note = "three concurrent lines plus a transversal line";
  return finish(e);
}

CatalogEntry artin(const std::string& kind, int m) {
  CatalogEntry e;
  e.note = "Artin group";
  auto two = [&](const std::string& rels) { return "gens: a b\n" + rels + "lk: a=1 b=1\n"; };
  if (kind == "A2") {
    e.text = two("rel: a b a = b a b\n");
    e.delta = {E(0, false, "2", "summary"), E(1, true, "1", "summary")};
  } else if (kind == "B2") {
    e.text = two("rel: a b a b = b a b a\n");
    e.delta = {E(0, false, "2", "summary"), E(1, true, "2", "summary")};
  } else if (kind == "B3") {
    e.text = "gens: a b c\nrel: a b a = b a b\nrel: a c = c a\nrel: b c b c = c b c b\nlk: a=1 b=1 c=1\n";
    e.delta = {E(0, false, "4", "summary"), E(1, true, "3", "summary")};
  } else if (kind == "B4" || kind == "F4") {
    std::string bc = kind == "B4" ? "rel: b c b = c b c\nrel: c d c d = d c d c\n"
                                  : "rel: b c b c = c b c b\nrel: c d c = d c d\n";
    e.text = "gens: a b c d\nrel: a b a = b a b\n" + bc + "rel: a c = c a\nrel: a d = d a\nrel: b d = d b\nlk: a=1 b=1 c=1 d=1\n";
    e.delta = {E(0, false, "1", "summary"), E(1, true, "0", "summary")};
  } else if (kind == "D4") {
    e.text =
        "gens: a b c d\nrel: a c a = c a c\nrel: b c b = c b c\nrel: d c d = c d c\n"
        "rel: a b = b a\nrel: a d = d a\nrel: b d = d b\nlk: a=1 b=1 c=1 d=1\n";
    e.delta = {E(0, false, "2", "summary"), E(1, false, "1", "summary"), E(2, true, "0", "summary")};
  } else if (kind == "A3") {
    e.text = "gens: x y z\nrel: x z = z x\nrel: x y x = y x x y\nrel: y x z x y = z x y x z\nlk: x=1 y=0 z=0\n";
    e.delta = {E(0, false, "2", "stated"), E(1, false, "1", "stated"), E(2, false, "1", "stated")};
    e.note = "braid group on four strands; level 2 needs the fact 'z in G(3)', higher levels are open";
  } else if (kind == "I2") {
    if (m < 3 || m > 12) throw InputError("dihedral Artin parameter must be in [3, 12]");
    e.text = two("rel: " + alternating("a", "b", m) + " = " + alternating("b", "a", m) + "\n");
    if (m % 2)
      e.delta = {E(0, false, std::to_string(m - 1), "summary"), E(1, true, std::to_string(m - 2), "summary")};
    else
      e.delta = {E(0, true, std::to_string(m - 2), "summary")};
    e.params = {m};
  } else {
    throw InputError("unknown Artin type " + kind + " (A2 A3 B2 B3 B4 F4 D4 I2)");
  }
  e.name = kind == "I2" ? fmt::format("artin-I2-{}", m) : "artin-" + kind;
  return finish(e);
}

CatalogEntry torus_knot(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw InputError("torus knot parameters must be coprime and at least 2");
  // splitting word a^x b^y with q x + p y = 1
  int x = 0, y = 0;
  for (int cand = -p; cand <= p; ++cand)
    if ((1 - q * cand) % p == 0) {
      int cy = (1 - q * cand) / p;
      if (x == 0 && y == 0 || std::abs(cand) + std::abs(cy) < std::abs(x) + std::abs(y)) x = cand, y = cy;
    }
  auto rep = [](const char* s, int k) {
    std::string out;
    for (int i = 0; i < std::abs(k); ++i) out += std::string(out.empty() ? "" : " ") + s + (k < 0 ? "^-1" : "");
    return out;
  };
  CatalogEntry e;
  e.name = fmt::format("torus-knot-{}-{}", p, q);
  e.params = {p, q};
  e.text = fmt::format("gens: a b\nrel: {} = {}\nlk: a={} b={}\n", rep("a", p), rep("b", q), q, p);
  e.split = (rep("a", x) + " " + rep("b", y));
  e.split = std::regex_replace(e.split, std::regex(R"(^\s+|\s+$)"), "");
  int mu = (p - 1) * (q - 1);
  e.delta = {E(0, false, std::to_string(mu), "stated"), E(1, true, std::to_string(mu - 1), "stated")};
  e.note = "group of the singularity x^p = y^q; values are the Milnor number and one less";
  return finish(e);
}

}  // namespace

std::optional<Expectation> CatalogEntry::expected_at(int n) const {
  std::optional<Expectation> best;
  for (auto& x : delta) {
    if (x.level == n) return x;
    if (x.and_above && x.level < n && (!best || x.level > best->level)) best = x;
  }
  return best;
}

std::optional<Word> default_splitting(const Presentation& p) {
  for (int i = 0; i < p.ngens(); ++i)
    if (p.has_linking() && p.linking[i] == 1) return Word{i + 1};
  return std::nullopt;
}

CatalogEntry catalog_get(const std::string& name, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k) throw InputError(fmt::format("catalog entry {} takes {} parameter(s)", name, k));
  };
  if (name == "pencil") {
    need(1);
    return pencil(params[0]);
  }
  if (name == "torus-knot") {
    need(2);
    return torus_knot(params[0], params[1]);
  }
  if (name.rfind("artin-", 0) == 0 || name == "artin") {
    std::string kind = name == "artin" ? "" : name.substr(6);
    if (kind == "I2") {
      need(1);
      return artin("I2", params[0]);
    }
    need(0);
    return artin(kind, 0);
  }
  need(0);
  CatalogEntry e;
  e.name = name;
  if (name == "node-added") return node_added();
  if (name == "quartic-3cusp") {
    e.text =
        "gens: a b\nrel: a b a = b a b\nrel: a a = b b\nlk: a=1 b=1\ndegrees: 4\n"
        "sing: c1 mu=2 branches=1 delta=t^2 - t + 1\nsing: c2 mu=2 branches=1 delta=t^2 - t + 1\n"
        "sing: c3 mu=2 branches=1 delta=t^2 - t + 1\ngenus: 0\n";
    e.delta = {E(0, true, "0", "stated")};
    e.alexander = "1";
    e.note = "three-cuspidal quartic; the commutator subgroup is finite";
  } else if (name == "trefoil" || name == "sextic-on-conic") {
    e.text = "gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n";
    if (name == "sextic-on-conic") {
      e.text += "degrees: 6\n";
      for (int i = 1; i <= 6; ++i) e.text += fmt::format("sing: c{} mu=2 branches=1 delta=t^2 - t + 1\n", i);
      e.text += "genus: 4\n";
      e.note = "sextic with six cusps on a conic; half of a Zariski pair with sextic-generic";
    } else {
      e.note = "trefoil knot group";
    }
    e.delta = {E(0, false, "2", "stated"), E(1, true, "1", "stated")};
    e.alexander = "t^2 - t + 1";
  } else if (name == "sextic-generic") {
    e.text = "gens: a\nlk: a=1\ndegrees: 6\n";
    for (int i = 1; i <= 6; ++i) e.text += fmt::format("sing: c{} mu=2 branches=1 delta=t^2 - t + 1\n", i);
    e.text += "genus: 4\n";
    e.delta = {E(0, true, "0", "derived")};
    e.alexander = "1";
    e.note = "sextic with six cusps not on a conic; abelian group, the other half of the Zariski pair";
  } else if (name == "harvey-boundary-link") {
    e.text =
        "gens: a b c d e f g h i j k l\n"
        "rel: b g^-1 i c^-1 i^-1 g\nrel: c j^-1 l a^-1 l^-1 j\nrel: f e^-1 h g^-1 h^-1 e\n"
        "rel: i h^-1 k j^-1 k^-1 h\nrel: l k^-1 e d^-1 e^-1 k\nrel: d a^-1 e^-1 a\nrel: e b f^-1 b^-1\n"
        "rel: g b^-1 h^-1 b\nrel: h c i^-1 c^-1\nrel: j c^-1 k^-1 c\nrel: k a l^-1 a^-1\n"
        "lk: a=1 b=1 c=1 d=1 e=1 f=1 g=1 h=1 i=1 j=1 k=1 l=1\n";
    e.delta = {E(0, false, "inf", "stated")};
    e.note = "boundary link complement; not a plane curve group";
  } else if (name == "figure8") {
    e.text = "gens: a b\nrel: b a^-1 b a b^-1 = a^-1 b a b^-1 a\nlk: a=1 b=1\n";
    e.alexander = "t^2 - 3t + 1";
    e.note = "figure-eight knot group; its Alexander polynomial is not cyclotomic";
  } else if (name == "free-F3") {
    e.text = "gens: a b c\nlk: a=1 b=1 c=1\n";
    e.delta = {E(0, false, "inf", "stated")};
    e.note = "free group of rank three";
  } else if (name == "two-lines") {
    e.text = "gens: a b\nrel: a b = b a\nlk: a=1 b=1\ndegrees: 1 1\n";
    e.text += fmt::format("sing: n1 mu=1 branches=2 delta={}\ngenus: 0\n", ordinary_point(2));
    e.delta = {E(0, true, "0", "derived")};
    e.alexander = "t - 1";
    e.note = "two transversal lines";
  } else {
    throw InputError("unknown catalog entry '" + name + "'");
  }
  return finish(e);
}

CatalogEntry catalog_lookup(const std::string& full) {
  static const std::regex with_params(R"(^([a-zA-Z][a-zA-Z0-9]*(?:-[a-zA-Z][a-zA-Z0-9]*)*?)-?((?:\d+)(?:-\d+)*)$)");
  std::smatch m;
  std::string name = full;
  std::replace(name.begin(), name.end(), ' ', '-');
  static const std::vector<std::string> plain{"node-added", "quartic-3cusp", "trefoil",  "sextic-on-conic",
                                             "sextic-generic", "harvey-boundary-link", "figure8", "free-F3",
                                             "two-lines", "artin-A2", "artin-A3", "artin-B2", "artin-B3",
                                             "artin-B4", "artin-F4", "artin-D4"};
  if (std::find(plain.begin(), plain.end(), name) != plain.end()) return catalog_get(name);
  if (std::regex_match(name, m, with_params)) {
    std::vector<int> ps;
    std::string rest = m[2];
    std::replace(rest.begin(), rest.end(), '-', ' ');
    std::istringstream in(rest);
    int v;
    while (in >> v) ps.push_back(v);
    return catalog_get(m[1], ps);
  }
  return catalog_get(name);
}

std::vector<std::string> catalog_names() {
  return {"pencil3",       "pencil4",       "pencil5",    "node-added",     "artin-A2",
          "artin-B2",      "artin-B3",      "artin-B4",   "artin-F4",       "artin-D4",
          "artin-A3",      "artin-I2-5",    "artin-I2-6", "quartic-3cusp",  "trefoil",
          "sextic-on-conic", "sextic-generic", "torus-knot-2-3", "torus-knot-2-5", "harvey-boundary-link",
          "figure8",       "free-F3",       "two-lines"};
}

}  // namespace alexinvar
