#include <doctest.h>

#include <random>

#include "alexinvar/laurent.hpp"

using namespace alexinvar;

namespace {

QLaurent P(const std::string& s) { return parse_uni(s); }

MultiLaurentPoly M(const std::string& s, int n = 2) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return parse_multi(s, names);
}

}  // namespace

TEST_CASE("univariate gcd") {
  CHECK(univar_gcd(P("t^2 - 1"), P("t^3 - 1")) == P("t - 1"));
  CHECK(univar_gcd(P("2*t^3 - 4*t"), QLaurent()) == P("t^2 - 2"));
  CHECK(univar_gcd(P("t^2 - t + 1"), P("t^6 - 1")) == P("t^2 - t + 1"));
  CHECK(P("t^6 - 1") == P("t^2 - t + 1") * P("t^4 + t^3 - t - 1"));
}

TEST_CASE("display") {
  CHECK(P("1 - t + t^2").to_string() == "t^2 - t + 1");
  CHECK(P("-3 + t^-1").to_string() == "-3 + t^-1");
  CHECK(M("t1^-1*t2^2 - 3").to_string() == "t1^-1*t2^2 - 3");
}

TEST_CASE("smith normal form") {
  using Mat = std::vector<std::vector<QLaurent>>;
  Mat a{{P("t - 1"), QLaurent()}, {QLaurent(), P("t^2 - 1")}};
  auto s = smith_normal_form<Rational>(a, 2, {});
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == P("t - 1"));
  CHECK(s.divisors[1] == P("t^2 - 1"));
  CHECK(smith_replay(s) == a);

  Mat b{{P("t"), P("t")}, {QLaurent(), P("t - 1")}};
  auto sb = smith_normal_form<Rational>(b, 2, {});
  REQUIRE(sb.divisors.size() == 2);
  CHECK(sb.divisors[0] == P("1"));
  CHECK(sb.divisors[1] == P("t^2 - t").unit_normal());
  CHECK(smith_replay(sb) == b);

  Mat tr{{P("1 - t + t^2"), -P("1 - t + t^2")}};
  auto st = smith_normal_form<Rational>(tr, 2, {});
  REQUIRE(st.divisors.size() == 1);
  CHECK(st.divisors[0] == P("t^2 - t + 1"));
  CHECK(st.zero_count == 1);
}

TEST_CASE("property: random smith forms replay and divide") {
  std::mt19937 rng(3);
  auto rnd = [&] {
    std::vector<Rational> c;
    int n = rng() % 4;
    for (int i = 0; i < n; ++i) c.emplace_back(static_cast<long>(rng() % 7) - 3);
    return QLaurent::from_coeffs({}, static_cast<int>(rng() % 3) - 1, c);
  };
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + rng() % 3, c = 1 + rng() % 3;
    std::vector<std::vector<QLaurent>> a(r, std::vector<QLaurent>(c));
    for (auto& row : a)
      for (auto& e : row) e = rnd();
    auto s = smith_normal_form<Rational>(a, c, {});
    CHECK(smith_replay(s) == a);
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) CHECK(s.divisors[i + 1].exact_div(s.divisors[i]).has_value());
  }
}

TEST_CASE("ring axioms and span additivity") {
  std::mt19937 rng(5);
  auto rnd = [&] {
    std::vector<Rational> c;
    int n = 1 + rng() % 4;
    for (int i = 0; i < n; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
    return QLaurent::from_coeffs({}, static_cast<int>(rng() % 5) - 2, c);
  };
  for (int i = 0; i < 200; ++i) {
    auto p = rnd(), q = rnd(), r = rnd();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p.unit_normal().unit_normal() == p.unit_normal());
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).span() == p.span() + q.span());
    auto g = univar_gcd(p, q);
    if (!g.is_zero()) {
      CHECK(p.exact_div(g).has_value());
      CHECK(q.exact_div(g).has_value());
    }
  }
}

TEST_CASE("multivariate gcd and rational functions") {
  auto a = M("t1*t2 - 1") * M("t1 + t2 + 1");
  auto b = M("t1*t2 - 1") * M("t1 - 3");
  CHECK(multi_gcd(a, b) == M("t1*t2 - 1"));
  CHECK(divide_exact(a, M("t1 + t2 + 1")) == M("t1*t2 - 1"));
  CHECK(!divide_exact(a, M("t1 - 2")).has_value());
  RationalFunction f(M("t1^2 - 1"), M("t1 - 1"));
  CHECK(f.num() == M("t1 + 1"));
  CHECK(f.den() == M("1"));
  RationalFunction g(M("t2"), M("t1 + 1"));
  CHECK((g * f) == RationalFunction(M("t2")));
  CHECK((g - g).is_zero());
}

TEST_CASE("minors and rank") {
  MultiMatrix d{{M("t1"), M("0")}, {M("0"), M("t2 - 1")}};
  auto m2 = minors(d, 2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == M("t1*t2 - t1"));
  MultiMatrix w{{M("1"), M("t1"), M("t2")}, {M("t1"), M("1"), M("0")}};
  CHECK(minors(w, 2).size() == 3);
  CHECK_THROWS(minors(w, 3));
  MultiMatrix z{{M("0"), M("0")}};
  CHECK(rank_over_fractions(z) == 0);
  MultiMatrix dd{{M("t1 - 1"), M("0")}, {M("0"), M("t1 + 1")}};
  CHECK(rank_over_fractions(dd) == 2);
  MultiMatrix dep{{M("t1"), M("t2")}, {M("t1^2"), M("t1*t2")}};
  CHECK(rank_over_fractions(dep) == 1);
}

TEST_CASE("cyclotomic evaluation") {
  auto z3 = CyclotomicValue::zeta_power(3, 1), z3b = CyclotomicValue::zeta_power(3, 2);
  CHECK(eval_at_character(M("t1*t2 - 1"), {z3, z3b}).is_zero());
  auto z6 = CyclotomicValue::zeta_power(6, 1);
  CHECK(eval_at_character(parse_multi("t^2 - t + 1", {"t"}), {z6}).is_zero());
  CHECK(!eval_at_character(parse_multi("t - 1", {"t"}), {z6}).is_zero());
  CHECK(cyclotomic_polynomial(6) == P("t^2 - t + 1"));
  CHECK(cyclotomic_polynomial(12) == P("t^4 - t^2 + 1"));
  CHECK((z6 * z6.inverse()).is_one());
  CHECK_THROWS(eval_at_character(M("t1 + t2"), {z3, z6}));
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto p = M(std::to_string(rng() % 5) + "*t1^" + std::to_string(int(rng() % 5) - 2) + " - t2 + 2");
    auto q = M("t1*t2^" + std::to_string(rng() % 4) + " + " + std::to_string(rng() % 3));
    std::vector<CyclotomicValue> lam{CyclotomicValue::zeta_power(5, rng() % 5), CyclotomicValue::zeta_power(5, rng() % 5)};
    CHECK(eval_at_character(p * q, lam) == eval_at_character(p, lam) * eval_at_character(q, lam));
  }
}
