#pragma once
#include <string>
#include <vector>

#include "alexinvar/group.hpp"
#include "alexinvar/laurent.hpp"

namespace alexinvar {

// generator -> Z^s; from ab: rows, else per-generator, else H1 modulo torsion
std::vector<std::vector<long long>> component_map(const Presentation& p);

MultiMatrix multivariable_matrix(const Presentation& p);

struct IdealData {
  int arity = 0;
  int index = 0;  // which elementary ideal
  bool unit_ideal = false;
  std::vector<MultiLaurentPoly> generators;  // empty and not unit: zero ideal
  MultiLaurentPoly gcd;
  bool is_zero() const { return !unit_ideal && generators.empty(); }
};

// E_i from (g-1-i)-minors of the Fox matrix over R_s (g generators)
IdealData order_ideal(const MultiMatrix& M, int i, int ngens, int arity);

struct CharacterPoint {
  int order = 1;
  std::vector<long> exponents;  // lambda_j = zeta_order^exponents[j]
  std::vector<CyclotomicValue> values() const;
  bool trivial() const;
  std::string to_string() const;
};

// "N:k1,k2,..."
CharacterPoint parse_character(const std::string& text);

bool support_member(const IdealData& I, const CharacterPoint& lambda);

struct ContainmentReport {
  bool holds = true;
  long scanned = 0;
  std::vector<CharacterPoint> support;
  std::vector<CharacterPoint> counterexamples;
  std::string scope;
};

ContainmentReport verify_support_containment(const IdealData& I, const std::vector<int>& degrees, int d,
                                             long budget = 1000000);

int local_system_h1_dim(const Presentation& p, const CharacterPoint& lambda);

}  // namespace alexinvar
