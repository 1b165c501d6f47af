#pragma once
#include <vector>

#include "alexinvar/group.hpp"

namespace alexinvar {

// bounded shortlex Knuth-Bendix system; sound for equality, never for inequality
class RewriteSystem {
 public:
  RewriteSystem(const std::vector<Word>& relators, int max_rules, int max_len, int rounds);
  Word reduce(const Word& w) const;
  bool confluent() const { return confluent_; }
  size_t size() const { return rules_.size(); }

 private:
  bool orient(Word& a, Word& b) const;
  void add(Word a, Word b);
  void complete(int max_rules, int max_len, int rounds);
  int find(const Word& lhs) const;

  std::vector<std::pair<Word, Word>> rules_;
  bool confluent_ = false;
};

}  // namespace alexinvar
