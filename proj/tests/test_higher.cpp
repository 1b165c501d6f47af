#include <doctest.h>

#include <random>

#include "alexinvar/higher_order.hpp"

using namespace alexinvar;

namespace {

const char* kPencil3 = "gens: a b c\nrel: a b a c = b a c a = c a a b\nlk: a=1 b=0 c=0\n";
const char* kBraid4 =
    "gens: x y z\nrel: x z = z x\nrel: x y x = y x x y\nrel: y x z x y = z x y x z\nlk: x=1 y=0 z=0\n";
const char* kTrefoil = "gens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n";

Coef C(const Presentation& p, std::initializer_list<std::pair<const char*, int>> terms) {
  Coef c;
  for (auto& [w, v] : terms) c[p.parse_word(w)] += v;
  for (auto it = c.begin(); it != c.end();) it = sgn(it->second) == 0 ? c.erase(it) : std::next(it);
  return c;
}

DeltaResult delta(const char* text, const char* split, int n, std::vector<std::string> facts = {}) {
  auto p = parse_presentation(text);
  AssumptionLedger led;
  for (auto& f : facts) led.add(p, f);
  return higher_order_degree(p, SplittingChoice{p.parse_word(split)}, n, led);
}

}  // namespace

TEST_CASE("skew commutation law on random coefficients") {
  auto p = parse_presentation(kPencil3);
  Word s = p.parse_word("a");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(-3, 3), len(0, 6), expo(-4, 4), coef(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    Coef c;
    int terms = 1 + trial % 3;
    for (int i = 0; i < terms; ++i) {
      Word w;
      for (int k = len(rng); k > 0; --k) {
        int x = letter(rng);
        if (x) w.push_back(x);
      }
      // conjugate into the kernel of the linking map
      w = free_reduce(w);
      long long e = p.psi(w);
      w = concat(w, power(s, -static_cast<int>(e)));
      int v = coef(rng);
      if (v) c[w] += v;
    }
    for (auto it = c.begin(); it != c.end();) it = sgn(it->second) == 0 ? c.erase(it) : std::next(it);
    int k = expo(rng);
    auto lhs = skew_mul_formal({{k, {{Word{}, 1}}}}, {{0, c}}, s);
    SkewLaurentPoly rhs;
    Coef ac;
    for (auto& [w, v] : c) ac[concat(concat(power(s, k), w), power(s, -k))] += v;
    if (!ac.empty()) rhs[k] = ac;
    CHECK(lhs == rhs);
    // the same identity through the t-normal form of the underlying words
    for (auto& [w, v] : c) {
      auto [u, e] = t_normal_form(concat(power(s, k), w), SplittingChoice{s}, p);
      CHECK(e == k);
      CHECK(free_reduce(concat(u, power(s, k))) == free_reduce(concat(power(s, k), w)));
    }
  }
}

TEST_CASE("skew matrix of the three-line pencil") {
  auto p = parse_presentation(kPencil3);
  AssumptionLedger led;
  QuotientOracle q(p, SplittingChoice{p.parse_word("a")}, 3, led, {});
  auto M = build_skew_matrix(q);
  REQUIRE(M.size() == 2);
  REQUIRE(M[0].size() == 3);
  bool found = false;
  for (auto& r : M)
    for (auto& e : r) {
      auto t2 = e.find(2), t1 = e.find(1);
      if (t2 != e.end() && t1 != e.end() && t2->second.count(p.parse_word("a b a^-1")) &&
          t1->second.count(p.parse_word("b")))
        found = true;
    }
  CHECK(found);
}

TEST_CASE("oracle verdicts") {
  auto pen = parse_presentation(kPencil3);
  auto b4 = parse_presentation(kBraid4);
  AssumptionLedger none;
  SplittingChoice sa{pen.parse_word("a")}, sx{b4.parse_word("x")};
  for (int n = 0; n <= 3; ++n) {
    auto v = certify(C(pen, {{"1", 1}, {"c", -1}}), n, pen, none, sa);
    CHECK(v.kind == OracleVerdict::Nonzero);
  }
  auto v1 = certify(C(pen, {{"1", 1}, {"c", -1}}), 2, pen, none, sa);
  CHECK(v1.certificate.find("abelian") != std::string::npos);
  for (int n = 1; n <= 3; ++n) {
    auto v = certify(C(b4, {{"x^-1 y x", 1}, {"1", -1}, {"z y", -1}}), n, b4, none, sx);
    CHECK(v.kind == OracleVerdict::Nonzero);
    CHECK(v.certificate.find("augmentation") != std::string::npos);
  }
  CHECK(certify(C(b4, {{"1", 1}, {"y", -1}}), 0, b4, none, sx).kind == OracleVerdict::Zero);
  auto m1 = certify(C(b4, {{"1", 1}, {"y", -1}}), 1, b4, none, sx);
  CHECK(m1.kind == OracleVerdict::Nonzero);
  CHECK(m1.certificate.find("metabelian") != std::string::npos);
  CHECK(certify(C(b4, {{"x y x^-1", 1}, {"y", -1}}), 1, b4, none, sx).kind == OracleVerdict::Nonzero);
  // nothing certifies 1 - z beyond the metabelian level
  CHECK(certify(C(b4, {{"1", 1}, {"z", -1}}), 3, b4, none, sx).kind == OracleVerdict::Unknown);
}

TEST_CASE("assumption ledger") {
  auto b4 = parse_presentation(kBraid4);
  AssumptionLedger led;
  led.add(b4, "z in G(3)");
  REQUIRE(led.facts().size() == 1);
  CHECK(led.facts()[0].kind == Fact::Eq);
  CHECK(led.facts()[0].level == 2);
  CHECK_THROWS_AS(led.add(b4, "z!=1@1"), InputError);
  led.add(b4, "z!=1@3");
  CHECK_THROWS_AS(led.add(b4, "q=1@1"), InputError);
  CHECK_THROWS_AS(led.add(b4, "z=1"), InputError);
  SplittingChoice sx{b4.parse_word("x")};
  AssumptionLedger z1;
  z1.add(b4, "z=1@3");
  CHECK(certify(C(b4, {{"1", 1}, {"z", -1}}), 3, b4, z1, sx).kind == OracleVerdict::Zero);
  CHECK(certify(C(b4, {{"1", 1}, {"z", -1}}), 2, b4, z1, sx).kind == OracleVerdict::Zero);
}

TEST_CASE("higher-order degrees of the pencil, braid and trefoil groups") {
  for (int n = 0; n <= 3; ++n) {
    auto r = delta(kPencil3, "a", n);
    CHECK(r.outcome == DeltaResult::Finite);
    CHECK(r.value == 3);
    CHECK(r.replay_ok);
  }
  CHECK(delta(kBraid4, "x", 0).signature() == "finite:2");
  CHECK(delta(kBraid4, "x", 1).signature() == "finite:1");
  CHECK(delta(kBraid4, "x", 2, {"z in G(3)"}).signature() == "finite:1");
  auto open = delta(kBraid4, "x", 3);
  REQUIRE(open.outcome == DeltaResult::Conditional);
  CHECK(open.branches[0].assumption == "z=1@3");
  CHECK(open.branches[0].result.signature() == "finite:1");
  CHECK(delta(kTrefoil, "a", 0).signature() == "finite:2");
  CHECK(delta(kTrefoil, "a", 1).signature() == "finite:1");
  CHECK(delta(kTrefoil, "b", 1).signature() == "finite:1");
  CHECK(delta(kPencil3, "c a", 1).signature() == "finite:3");
  CHECK(delta(kBraid4, "y x", 1).signature() == "finite:1");
  CHECK(delta("gens: a b c\nlk: a=1 b=1 c=1\n", "a", 0).signature() == "infinite:2");
  CHECK(delta("gens: a b\nrel: a b a^-1 b^-1\nlk: a=1 b=1\n", "a", 0).signature() == "finite:0");
}

TEST_CASE("engine guards") {
  auto p = parse_presentation(kPencil3);
  EngineOptions tiny;
  tiny.move_budget = 2;
  CHECK_THROWS_AS(higher_order_degree(p, SplittingChoice{p.parse_word("a")}, 0, {}, tiny), EngineError);
  CHECK_THROWS_AS(higher_order_degree(p, SplittingChoice{p.parse_word("b")}, 0), InputError);
  auto nolk = parse_presentation("gens: a b\nrel: a b a = b a b\n");
  CHECK_THROWS_AS(higher_order_degree(nolk, SplittingChoice{nolk.parse_word("a")}, 0), InputError);
}

TEST_CASE("degree and local bounds") {
  auto p = parse_presentation(std::string(kPencil3) +
                              "degrees: 1 1 1\nsing: triple mu=4 branches=3 delta=t^6 - 2t^3 + 1\ngenus: 0\n");
  auto cd = curve_data_from(p);
  REQUIRE(cd);
  CHECK(cd->d == 3);
  CHECK(cd->s == 3);
  CHECK(cd->l() == 1);
  std::vector<std::pair<int, DeltaResult>> rs;
  for (int n = 0; n <= 2; ++n) rs.emplace_back(n, delta(kPencil3, "a", n));
  auto b = check_bounds(rs, *cd);
  REQUIRE(b.size() == 3);
  for (auto& x : b) {
    CHECK(x.status == "pass");
    CHECK(x.degree_bound == 3);
    CHECK(x.local_bound == 12);
    CHECK(x.delta == 3);
  }
  std::vector<std::pair<int, DeltaResult>> inf{{0, delta("gens: a b c\nlk: a=1 b=1 c=1\n", "a", 0)}};
  CHECK(check_bounds(inf, *cd)[0].status == "fail");
  CHECK_THROWS_AS(curve_data_from(parse_presentation("gens: a\nlk: a=1\ndegrees: 1\nsing: x mu=-1 branches=1\n")),
                  InputError);
}
