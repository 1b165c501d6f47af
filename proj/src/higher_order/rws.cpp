#include "rws.hpp"

#include <algorithm>
#include <set>

namespace alexinvar {

namespace {

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (size_t i = 0; i < u.size(); ++i) {
    int a = std::abs(u[i]), b = std::abs(v[i]);
    if (a != b) return a < b;
    int sa = u[i] > 0 ? 0 : 1, sb = v[i] > 0 ? 0 : 1;
    if (sa != sb) return sa < sb;
  }
  return false;
}

bool contains(const Word& w, const Word& s) {
  if (s.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), s.begin(), s.end()) != w.end();
}

Word slice(const Word& w, size_t a, size_t b) { return Word(w.begin() + a, w.begin() + b); }

Word join(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

}  // namespace

RewriteSystem::RewriteSystem(const std::vector<Word>& relators, int max_rules, int max_len, int rounds) {
  for (auto& r : relators)
    for (const Word& w : {r, inverse(r)}) {
      size_t n = w.size();
      for (size_t i = 0; i < n; ++i) {
        Word c = join(slice(w, i, n), slice(w, 0, i));
        if (free_reduce(c) != c || (n > 1 && c.front() == -c.back())) continue;
        size_t h = (n + 1) / 2;
        add(slice(c, 0, h), inverse(slice(c, h, n)));
      }
    }
  complete(max_rules, max_len, rounds);
}

int RewriteSystem::find(const Word& lhs) const {
  for (size_t i = 0; i < rules_.size(); ++i)
    if (rules_[i].first == lhs) return static_cast<int>(i);
  return -1;
}

Word RewriteSystem::reduce(const Word& w0) const {
  Word w = free_reduce(w0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [l, r] : rules_) {
      auto it = std::search(w.begin(), w.end(), l.begin(), l.end());
      if (it == w.end()) continue;
      Word nw(w.begin(), it);
      nw.insert(nw.end(), r.begin(), r.end());
      nw.insert(nw.end(), it + l.size(), w.end());
      w = free_reduce(nw);
      changed = true;
      break;
    }
  }
  return w;
}

bool RewriteSystem::orient(Word& a, Word& b) const {
  a = reduce(a);
  b = reduce(b);
  if (a == b) return false;
  if (shortlex_less(a, b)) std::swap(a, b);
  return true;
}

void RewriteSystem::add(Word a, Word b) {
  if (!orient(a, b)) return;
  std::vector<std::pair<Word, Word>> pending{{a, b}};
  while (!pending.empty()) {
    auto [l, r] = pending.back();
    pending.pop_back();
    if (!orient(l, r)) continue;
    int at = find(l);
    if (at >= 0)
      rules_[at].second = r;
    else
      rules_.emplace_back(l, r);
    std::vector<Word> keys;
    for (auto& rule : rules_) keys.push_back(rule.first);
    for (auto& L : keys) {
      if (L == l) continue;
      int k = find(L);
      if (k < 0) continue;
      if (contains(L, l)) {
        pending.push_back(rules_[k]);
        rules_.erase(rules_.begin() + k);
      } else {
        Word nr = reduce(rules_[k].second);
        if (nr != rules_[k].second) rules_[k].second = nr;
      }
    }
  }
}

void RewriteSystem::complete(int max_rules, int max_len, int rounds) {
  confluent_ = false;
  for (int round = 0; round < rounds; ++round) {
    auto rl = rules_;
    std::set<int> letters;
    for (auto& [l, r] : rl)
      for (int x : l) {
        letters.insert(x);
        letters.insert(-x);
      }
    std::vector<std::pair<Word, Word>> canc;
    for (int x : letters) canc.push_back({Word{x, -x}, Word{}});
    std::vector<std::pair<Word, Word>> fresh;
    auto all = rl;
    all.insert(all.end(), canc.begin(), canc.end());
    for (auto& [l1, r1] : rl)
      for (auto& [l2, r2] : all)
        for (size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
          if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
          if (static_cast<int>(l1.size() + l2.size() - k) > max_len) continue;
          fresh.push_back({join(r1, slice(l2, k, l2.size())), join(slice(l1, 0, l1.size() - k), r2)});
        }
    for (auto& [l1, r1] : canc)
      for (auto& [l2, r2] : rl)
        if (l1.back() == l2.front()) fresh.push_back({join(r1, slice(l2, 1, l2.size())), join(slice(l1, 0, 1), r2)});
    bool added = false;
    for (auto& [a, b] : fresh) {
      if (static_cast<int>(rules_.size()) > max_rules) return;
      if (reduce(a) != reduce(b)) {
        add(a, b);
        added = true;
      }
    }
    if (!added) {
      confluent_ = true;
      return;
    }
  }
}

}  // namespace alexinvar
