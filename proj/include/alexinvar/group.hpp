#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alexinvar {

// letters are +-(generator index + 1)
using Word = std::vector<int>;

struct WordHash {
  size_t operator()(const Word& w) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<uint64_t>(x + 0x9e37);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Word free_reduce(const Word& raw);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, int k);

// integer combination of free words
using FreeRingElement = std::map<Word, long long>;

FreeRingElement ring_add(const FreeRingElement& a, const FreeRingElement& b, long long sign = 1);
FreeRingElement ring_mul(const FreeRingElement& a, const FreeRingElement& b);

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<long long> linking;  // empty when no lk line was given
  // unparsed extension lines (degrees:, ab:, sing:, genus:) keyed by tag
  std::vector<std::pair<std::string, std::string>> extras;

  int ngens() const { return static_cast<int>(generators.size()); }
  bool has_linking() const { return !linking.empty(); }
  int index_of(const std::string& sym) const;  // -1 if unknown
  Word parse_word(const std::string& text) const;
  std::string show(const Word& w) const;  // file syntax, "1" for identity
  std::string compact(const Word& w) const;  // aba~ style
  long long psi(const Word& w) const;
  bool primitive() const;
  void validate() const;
};

Presentation parse_presentation(const std::string& text);

FreeRingElement fox_derivative(const Word& w, int gen);
std::vector<std::vector<FreeRingElement>> fox_matrix(const Presentation& p);
std::vector<long long> abelianize(const Word& w, const Presentation& p);

struct SplittingChoice {
  Word section_word;
};

std::pair<Word, long long> t_normal_form(const Word& w, const SplittingChoice& s, const Presentation& p);

}  // namespace alexinvar
