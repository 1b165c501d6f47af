#include <doctest.h>

#include "alexinvar/alexander.hpp"

using namespace alexinvar;

namespace {

QLaurent P(const std::string& s) { return parse_uni(s); }

}  // namespace

TEST_CASE("trefoil alexander polynomial") {
  auto p = parse_presentation("gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n");
  auto m = infinite_cyclic_matrix(p);
  REQUIRE(m.size() == 1);
  CHECK(m[0][0].unit_normal() == P("t^2 - t + 1"));
  CHECK(m[0][1].unit_normal() == P("t^2 - t + 1"));
  auto r = alexander_polynomial(p);
  CHECK(r.delta == P("t^2 - t + 1"));
  CHECK(r.free_rank == 0);
  CHECK(r.minors_checked);
  CHECK(r.delta_at_one == 1);
}

TEST_CASE("quartic, two lines, free group") {
  auto q = parse_presentation("gens: a b\nrel: a b a = b a b\nrel: a a = b b\nlk: a=1 b=1\n");
  CHECK(alexander_polynomial(q).delta == P("1"));
  auto two = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\nlk: a=1 b=1\n");
  auto r2 = alexander_polynomial(two);
  CHECK(r2.delta == P("t - 1"));
  CHECK(r2.free_rank == 0);
  auto z = parse_presentation("gens: a\nlk: a=1\n");
  auto rz = alexander_polynomial(z);
  CHECK(rz.delta == P("1"));
  CHECK(rz.free_rank == 0);
  CHECK(infinite_cyclic_matrix(z).empty());
  auto f3 = parse_presentation("gens: a b c\nlk: a=1 b=1 c=1\n");
  CHECK(alexander_polynomial(f3).free_rank == 2);
  CHECK_THROWS_AS(alexander_polynomial(parse_presentation("gens: a b\nrel: a b a = b a b\nlk: a=2 b=2\n")), InputError);
}

TEST_CASE("cyclotomicity and (t-1) exponent") {
  CHECK(zeros_are_roots_of_unity(P("t^2 - t + 1"), 6).cyclotomic);
  CHECK(!zeros_are_roots_of_unity(P("t^2 - 3*t + 1")).cyclotomic);
  CHECK(zeros_are_roots_of_unity(P("t - 1"), 1).cyclotomic);
  CHECK(!zeros_are_roots_of_unity(P("t^2 - t + 1"), 4).cyclotomic);
  CHECK(zeros_are_roots_of_unity(P("t^4 + t^3 + t^2 + t + 1") * P("t^2 + 1")).cyclotomic);
  CHECK(t_minus_one_exponent(P("t^3 - 2*t^2 + 2*t - 1")) == 1);
  CHECK(t_minus_one_exponent(P("t^2 - t + 1")) == 0);
  CHECK(t_minus_one_exponent(P("t - 1") * P("t - 1") * P("t - 1")) == 3);
}

TEST_CASE("local divisibility") {
  auto cusp = P("t^2 - t + 1");
  CHECK((P("t^6 - 1") * P("t - 1")).exact_div(P("t^2 - 1") * P("t^3 - 1")) == cusp);
  std::vector<LocalSingularity> six(6, LocalSingularity{"cusp", cusp, 2, 1});
  auto v = check_divisibility(cusp, six);
  CHECK(v.divides);
  auto c5 = cusp * cusp * cusp * cusp * cusp;
  CHECK(*v.cofactor == c5);
  CHECK(check_divisibility(P("1"), six).divides);
  CHECK(!check_divisibility(P("t^2 - 3*t + 1"), six).divides);
}

TEST_CASE("figure eight") {
  auto p = parse_presentation("gens: a b\nrel: b a^-1 b a b^-1 = a^-1 b a b^-1 a\nlk: a=1 b=1\n");
  auto r = alexander_polynomial(p);
  CHECK(r.delta == P("t^2 - 3*t + 1"));
  CHECK(!zeros_are_roots_of_unity(r.delta).cyclotomic);
}

TEST_CASE("torsion over the kernel fraction field") {
  auto tr = parse_presentation("gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n");
  auto k = torsion_over_k0(tr);
  CHECK(k.arity == 0);
  CHECK(k.torsion_degree == 2);
  auto pen = parse_presentation("gens: a b c\nrel: a b a c = b a c a\nrel: b a c a = c a a b\nlk: a=1 b=0 c=0\n");
  CHECK(first_betti(pen) == 3);
  auto kp = torsion_over_k0(pen);
  CHECK(kp.arity == 2);
  CHECK(kp.free_rank == 0);
  CHECK(kp.torsion_degree == 3);
}
