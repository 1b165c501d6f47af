#include "alexinvar/group.hpp"

#include <fmt/format.h>

#include <cctype>
#include <numeric>
#include <sstream>

namespace alexinvar {

Word free_reduce(const Word& raw) {
  Word st;
  st.reserve(raw.size());
  for (int x : raw) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  return st;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r;
  r.reserve(u.size() + v.size());
  size_t i = u.size(), j = 0;
  while (i > 0 && j < v.size() && u[i - 1] == -v[j]) {
    --i;
    ++j;
  }
  r.insert(r.end(), u.begin(), u.begin() + i);
  r.insert(r.end(), v.begin() + j, v.end());
  return r;
}

Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : inverse(w);
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = concat(r, base);
  return r;
}

FreeRingElement ring_add(const FreeRingElement& a, const FreeRingElement& b, long long sign) {
  FreeRingElement r = a;
  for (auto& [w, c] : b) {
    auto& slot = r[w];
    slot += sign * c;
    if (slot == 0) r.erase(w);
  }
  return r;
}

FreeRingElement ring_mul(const FreeRingElement& a, const FreeRingElement& b) {
  FreeRingElement r;
  for (auto& [u, x] : a)
    for (auto& [v, y] : b) {
      Word w = concat(u, v);
      auto& slot = r[w];
      slot += x * y;
      if (slot == 0) r.erase(w);
    }
  return r;
}

int Presentation::index_of(const std::string& sym) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == sym) return static_cast<int>(i);
  return -1;
}

Word Presentation::parse_word(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  Word raw;
  while (in >> tok) {
    std::string sym = tok;
    int e = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      sym = tok.substr(0, caret);
      try {
        size_t used = 0;
        e = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("");
      } catch (...) {
        throw InputError(fmt::format("bad exponent in '{}'", tok));
      }
      if (e == 0) throw InputError(fmt::format("zero exponent in '{}'", tok));
    }
    if (sym == "1" && caret == std::string::npos) continue;
    int i = index_of(sym);
    if (i < 0) throw InputError(fmt::format("undeclared generator '{}'", sym));
    for (int k = 0; k < std::abs(e); ++k) raw.push_back(e > 0 ? i + 1 : -(i + 1));
  }
  return free_reduce(raw);
}

std::string Presentation::show(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += generators[std::abs(w[i]) - 1];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

std::string Presentation::compact(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  bool multi = false;
  for (auto& g : generators) multi |= g.size() > 1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (multi && i) s += '.';
    s += generators[std::abs(w[i]) - 1];
    if (w[i] < 0) s += '~';
  }
  return s;
}

long long Presentation::psi(const Word& w) const {
  long long s = 0;
  for (int x : w) s += x > 0 ? linking[x - 1] : -linking[-x - 1];
  return s;
}

bool Presentation::primitive() const {
  long long g = 0;
  for (long long v : linking) g = std::gcd(g, v);
  return g == 1;
}

void Presentation::validate() const {
  for (auto& r : relators)
    for (int x : r)
      if (x == 0 || std::abs(x) > ngens()) throw InputError("relator uses an undeclared generator");
  if (!has_linking()) return;
  for (auto& r : relators)
    if (psi(r) != 0)
      throw InputError(fmt::format("linking map does not vanish on relator '{}'", show(r)));
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  std::vector<std::pair<int, std::string>> rels;
  std::string lk;
  int lk_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw InputError(fmt::format("line {}: expected '<tag>: ...'", lineno));
    std::string tag = trim(t.substr(0, colon));
    std::string body = trim(t.substr(colon + 1));
    if (!have_gens && tag != "gens")
      throw InputError(fmt::format("line {}: first item must be 'gens:'", lineno));
    if (tag == "gens") {
      if (have_gens) throw InputError(fmt::format("line {}: duplicate 'gens:'", lineno));
      std::istringstream g(body);
      std::string sym;
      while (g >> sym) {
        bool ok = std::isalpha(static_cast<unsigned char>(sym[0])) || sym[0] == '_';
        for (char c : sym) ok &= std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        if (!ok) throw InputError(fmt::format("line {}: bad generator symbol '{}'", lineno, sym));
        if (p.index_of(sym) >= 0) throw InputError(fmt::format("line {}: repeated generator '{}'", lineno, sym));
        p.generators.push_back(sym);
      }
      if (p.generators.empty()) throw InputError(fmt::format("line {}: no generators", lineno));
      have_gens = true;
    } else if (tag == "rel") {
      rels.emplace_back(lineno, body);
    } else if (tag == "lk") {
      lk = body;
      lk_line = lineno;
    } else if (tag == "degrees" || tag == "ab" || tag == "sing" || tag == "genus") {
      p.extras.emplace_back(tag, body);
    } else {
      throw InputError(fmt::format("line {}: unknown tag '{}'", lineno, tag));
    }
  }
  if (!have_gens) throw InputError("missing 'gens:' line");
  for (auto& [ln, body] : rels) {
    std::vector<Word> parts;
    size_t start = 0;
    while (true) {
      size_t eq = body.find('=', start);
      std::string piece = body.substr(start, eq == std::string::npos ? std::string::npos : eq - start);
      if (trim(piece).empty()) throw InputError(fmt::format("line {}: empty side in relation", ln));
      try {
        parts.push_back(p.parse_word(piece));
      } catch (const InputError& e) {
        throw InputError(fmt::format("line {}: {}", ln, e.what()));
      }
      if (eq == std::string::npos) break;
      start = eq + 1;
    }
    if (parts.size() == 1) {
      if (!parts[0].empty()) p.relators.push_back(parts[0]);
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      Word r = concat(parts[i], inverse(parts[i + 1]));
      if (!r.empty()) p.relators.push_back(r);
    }
  }
  if (lk_line) {
    p.linking.assign(p.generators.size(), 0);
    std::vector<bool> seen(p.generators.size(), false);
    std::istringstream g(lk);
    std::string item;
    while (g >> item) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError(fmt::format("line {}: expected sym=int in lk", lk_line));
      int i = p.index_of(item.substr(0, eq));
      if (i < 0) throw InputError(fmt::format("line {}: undeclared generator '{}'", lk_line, item.substr(0, eq)));
      try {
        p.linking[i] = std::stoll(item.substr(eq + 1));
      } catch (...) {
        throw InputError(fmt::format("line {}: bad integer in '{}'", lk_line, item));
      }
      seen[i] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw InputError(fmt::format("line {}: no linking value for '{}'", lk_line, p.generators[i]));
  }
  p.validate();
  return p;
}

FreeRingElement fox_derivative(const Word& w, int gen) {
  FreeRingElement out;
  Word prefix;
  int j = gen + 1;
  for (int x : w) {
    if (x == j) {
      out[prefix] += 1;
      if (out[prefix] == 0) out.erase(prefix);
    }
    prefix = concat(prefix, Word{x});
    if (x == -j) {
      out[prefix] -= 1;
      if (out[prefix] == 0) out.erase(prefix);
    }
  }
  return out;
}

std::vector<std::vector<FreeRingElement>> fox_matrix(const Presentation& p) {
  std::vector<std::vector<FreeRingElement>> m;
  for (auto& r : p.relators) {
    std::vector<FreeRingElement> row;
    for (int j = 0; j < p.ngens(); ++j) row.push_back(fox_derivative(r, j));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<long long> abelianize(const Word& w, const Presentation& p) {
  std::vector<long long> v(p.generators.size(), 0);
  for (int x : w) v[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return v;
}

std::pair<Word, long long> t_normal_form(const Word& w, const SplittingChoice& s, const Presentation& p) {
  long long e = p.psi(w);
  return {concat(w, power(s.section_word, static_cast<int>(-e))), e};
}

}  // namespace alexinvar
