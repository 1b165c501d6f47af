#pragma once
#include <optional>
#include <string>
#include <vector>

#include "alexinvar/group.hpp"
#include "alexinvar/laurent.hpp"

namespace alexinvar {

// rows of integer functionals on generators: row 0 is the linking map, the rest complete
// it to a rational basis of Hom(H1, Z)
std::vector<std::vector<long long>> hom_basis(const Presentation& p);
int first_betti(const Presentation& p);

using QMatrix = std::vector<std::vector<QLaurent>>;

QMatrix infinite_cyclic_matrix(const Presentation& p);

struct AlexanderResult {
  std::vector<QLaurent> divisors;  // nonunit torsion divisors, divisibility chain
  int free_rank = 0;               // after the basepoint summand is removed
  QLaurent delta;                  // unit-normal product
  Rational delta_at_one;
  bool minors_checked = false;
};

AlexanderResult alexander_polynomial(const Presentation& p);

struct RootsVerdict {
  bool cyclotomic = false;
  std::vector<int> orders;  // N with a nontrivial factor of t^N - 1 removed
  QLaurent residue;         // what is left after all trial divisions
};

RootsVerdict zeros_are_roots_of_unity(const QLaurent& delta, std::optional<int> d = std::nullopt, int n_max = 0);
int t_minus_one_exponent(const QLaurent& delta);

struct LocalSingularity {
  std::string label;
  QLaurent local_alexander;
  int milnor_number = 0;
  int branches = 1;
};

struct DivisibilityVerdict {
  bool divides = false;
  std::optional<QLaurent> cofactor;
};

DivisibilityVerdict check_divisibility(const QLaurent& delta, const std::vector<LocalSingularity>& locals);

// torsion of the relative module over K0[t^+-1], K0 = Q(u_1..u_{s-1}) the fraction field of the
// kernel of the linking map; agrees with the classical pipeline when s = 1
struct K0Result {
  int arity = 0;  // s - 1
  std::vector<KLaurent> divisors;
  int free_rank = 0;
  int torsion_degree = 0;
};

K0Result torsion_over_k0(const Presentation& p);

}  // namespace alexinvar
