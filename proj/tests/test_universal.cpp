#include <doctest.h>

#include "alexinvar/alexander.hpp"
#include "alexinvar/universal.hpp"

using namespace alexinvar;

namespace {

const char* kTrefoil = "gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n";
const char* kPencil3 =
    "gens: a b c\nrel: a b a c = b a c a = c a a b\nlk: a=1 b=0 c=0\n"
    "ab: a=(1,0,0) b=(-1,1,0) c=(-1,0,1)\n";

CharacterPoint pt(int n, std::vector<long> k) { return CharacterPoint{n, std::move(k)}; }

IdealData e0(const Presentation& p) {
  auto M = multivariable_matrix(p);
  int s = static_cast<int>(component_map(p)[0].size());
  return order_ideal(M, 0, p.ngens(), s);
}

}  // namespace

TEST_CASE("multivariable matrix") {
  auto tre = parse_presentation(kTrefoil);
  auto M = multivariable_matrix(tre);
  auto C = infinite_cyclic_matrix(tre);
  REQUIRE(M.size() == 1);
  for (int j = 0; j < 2; ++j)
    for (int e = -3; e <= 3; ++e) {
      auto it = M[0][j].terms().find({e});
      CHECK((it == M[0][j].terms().end() ? Rational(0) : it->second) == C[0][j].coeff(e));
    }
  auto z2 = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\nlk: a=1 b=1\n");
  auto N = multivariable_matrix(z2);
  // relator a b a^-1 b^-1: [1 - t2, t1 - 1], the negative of [t2 - 1, 1 - t1]
  CHECK(N[0][0].to_string({"t1", "t2"}) == "1 - t2");
  CHECK(N[0][1].to_string({"t1", "t2"}) == "-1 + t1");
  auto pen = parse_presentation(kPencil3);
  auto P = multivariable_matrix(pen);
  CHECK(P.size() == 2);
  CHECK(P[0].size() == 3);
  CHECK(P[0][0].nvars() == 3);
  CHECK_THROWS_AS(multivariable_matrix(parse_presentation("gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\nab: a=(1,0) b=(0,1)\n")),
                  InputError);
}

TEST_CASE("order ideals and support") {
  auto tre = parse_presentation(kTrefoil);
  auto I = e0(tre);
  CHECK(I.gcd.to_string() == "1 - t + t^2");
  CHECK(support_member(I, pt(6, {1})));
  CHECK(support_member(I, pt(6, {5})));
  CHECK_FALSE(support_member(I, pt(2, {1})));
  CHECK_FALSE(support_member(I, pt(1, {0})));
  // s = 1: support is the zero set of the Alexander polynomial
  auto delta = alexander_polynomial(tre).delta;
  MultiLaurentPoly dm(1);
  for (int e = delta.lo(); e <= delta.hi(); ++e) dm.add_term({e}, delta.coeff(e));
  int checked = 0;
  for (int n = 1; n <= 12 && checked < 50; ++n)
    for (long k = 0; k < n && checked < 50; ++k, ++checked) {
      auto c = pt(n, {k});
      CHECK(support_member(I, c) == eval_at_character(dm, c.values()).is_zero());
    }
  CHECK(checked == 50);
  auto unit = order_ideal({{MultiLaurentPoly::constant(1, 1), MultiLaurentPoly(1)}}, 0, 2, 1);
  CHECK(unit.unit_ideal);
  CHECK_FALSE(support_member(unit, pt(5, {2})));
  auto zero = order_ideal({}, 0, 3, 1);
  CHECK(zero.is_zero());
  CHECK(support_member(zero, pt(5, {2})));
}

TEST_CASE("gcd divides generators and ideals are nested on the grid") {
  auto pen = parse_presentation(kPencil3);
  auto M = multivariable_matrix(pen);
  auto I0 = order_ideal(M, 0, 3, 3), I1 = order_ideal(M, 1, 3, 3);
  for (auto& g : I0.generators) CHECK(divide_exact(g, I0.gcd).has_value());
  CharacterPoint c{3, {0, 0, 0}};
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long d = 0; d < 3; ++d) {
        c.exponents = {a, b, d};
        if (support_member(I1, c)) CHECK(support_member(I0, c));
      }
}

TEST_CASE("support containment") {
  auto pen = parse_presentation(kPencil3);
  auto r = verify_support_containment(e0(pen), {1, 1, 1}, 3);
  CHECK(r.scanned == 27);
  CHECK(r.holds);
  CHECK_FALSE(r.support.empty());
  for (auto& s : r.support) CHECK((s.exponents[0] + s.exponents[1] + s.exponents[2]) % 3 == 0);
  auto t = verify_support_containment(e0(parse_presentation(kTrefoil)), {6}, 6);
  CHECK(t.holds);
  REQUIRE(t.support.size() == 2);
  CHECK(t.support[0].exponents[0] == 1);
  CHECK(t.support[1].exponents[0] == 5);
  CHECK_THROWS_AS(verify_support_containment(e0(pen), {1, 1, 1}, 3, 10), InputError);
  CHECK_THROWS_AS(verify_support_containment(e0(pen), {1, 1}, 2), InputError);
}

TEST_CASE("rank-one local systems") {
  auto tre = parse_presentation(kTrefoil);
  CHECK(local_system_h1_dim(tre, pt(6, {1})) == 1);
  CHECK(local_system_h1_dim(tre, pt(2, {1})) == 0);
  CHECK_THROWS_AS(local_system_h1_dim(tre, pt(6, {0})), InputError);
  auto z2 = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\nlk: a=1 b=1\n");
  CHECK(local_system_h1_dim(z2, pt(5, {1, 2})) == 0);
  auto pen = parse_presentation(kPencil3);
  auto I = e0(pen);
  CharacterPoint c{3, {0, 0, 0}};
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long d = 0; d < 3; ++d) {
        c.exponents = {a, b, d};
        if (c.trivial()) continue;
        if (local_system_h1_dim(pen, c) >= 1) CHECK(support_member(I, c));
      }
  CHECK(parse_character("6:1").exponents == std::vector<long>{1});
  CHECK(parse_character("3: 1, -1").exponents == std::vector<long>{1, 2});
  CHECK_THROWS_AS(parse_character("zeta"), InputError);
}
