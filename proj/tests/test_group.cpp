#include <doctest.h>

#include <random>

#include "alexinvar/group.hpp"

using namespace alexinvar;

namespace {

Presentation pencil3() {
  return parse_presentation("gens: a b c\nrel: a b a c = b a c a\nrel: b a c a = c a a b\nlk: a=1 b=0 c=0\n");
}

// push a free ring element into Z[F] modulo nothing, reading words through show()
std::map<std::string, long long> named(const Presentation& p, const FreeRingElement& e) {
  std::map<std::string, long long> out;
  for (auto& [w, c] : e) out[p.compact(w)] = c;
  return out;
}

}  // namespace

TEST_CASE("parse pencil presentation") {
  auto p = pencil3();
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.compact(p.relators[0]) == "abaca~c~a~b~");
  CHECK(p.linking == std::vector<long long>{1, 0, 0});
}

TEST_CASE("parse edge cases") {
  auto z = parse_presentation("gens: a\nlk: a=1\n");
  CHECK(z.relators.empty());
  auto tr = parse_presentation("# trefoil\ngens: a b\nrel: a b a = b a b\nlk: a=1 b=1\n");
  CHECK(tr.relators.size() == 1);
  auto chain = parse_presentation("gens: a b\nrel: a = b = a\nlk: a=1 b=1\n");
  CHECK(chain.relators.size() == 2);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a b = b a\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel: a = b\nlk: a=1 b=0\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("rel: a = b\n"), InputError);
  try {
    parse_presentation("gens: a b\n\nbogus line\n");
    FAIL("expected error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, 2, -2, 3}) == Word{1, 3});
  CHECK(free_reduce({1, -1}).empty());
  Word r{1, 2, 1, 3, -1, -3, -1, -2};
  CHECK(free_reduce(r) == r);
}

TEST_CASE("fox derivatives") {
  auto p = pencil3();
  CHECK(named(p, fox_derivative({1}, 0)) == std::map<std::string, long long>{{"1", 1}});
  CHECK(named(p, fox_derivative({-1}, 0)) == std::map<std::string, long long>{{"a~", -1}});
  Word r = p.relators[0];
  auto db = named(p, fox_derivative(r, 1));
  CHECK(db.at("a") == 1);
  CHECK(db.at("abaca~c~a~b~") == -1);
  CHECK(db.size() == 2);
}

TEST_CASE("fox matrix shapes") {
  auto p = pencil3();
  auto m = fox_matrix(p);
  CHECK(m.size() == 2);
  CHECK(m[0].size() == 3);
  auto f = parse_presentation("gens: a b\nlk: a=1 b=1\n");
  CHECK(fox_matrix(f).empty());
}

TEST_CASE("abelianize and t-normal form") {
  auto p = pencil3();
  CHECK(abelianize(p.parse_word("b a c"), p) == std::vector<long long>{1, 1, 1});
  CHECK(abelianize(p.relators[0], p) == std::vector<long long>{0, 0, 0});
  CHECK(p.psi(p.parse_word("a b a")) == 2);
  SplittingChoice s{p.parse_word("a")};
  auto [k1, e1] = t_normal_form(p.parse_word("a b a"), s, p);
  CHECK(p.compact(k1) == "aba~");
  CHECK(e1 == 2);
  auto [k2, e2] = t_normal_form(p.parse_word("b a"), s, p);
  CHECK(p.compact(k2) == "b");
  CHECK(e2 == 1);
  auto [k3, e3] = t_normal_form(p.parse_word("a"), s, p);
  CHECK(k3.empty());
  CHECK(e3 == 1);
}

TEST_CASE("property: fox fundamental identity on 1000 random words") {
  std::mt19937 rng(7);
  int g = 3;
  int failures = 0;
  for (int n = 0; n < 1000; ++n) {
    Word raw;
    int len = std::uniform_int_distribution<int>(0, 14)(rng);
    for (int i = 0; i < len; ++i) {
      int x = std::uniform_int_distribution<int>(1, g)(rng);
      raw.push_back(rng() % 2 ? x : -x);
    }
    Word w = free_reduce(raw);
    FreeRingElement lhs{{w, 1}};
    lhs = ring_add(lhs, {{Word{}, 1}}, -1);
    FreeRingElement rhs;
    for (int j = 0; j < g; ++j) {
      FreeRingElement xm1{{Word{j + 1}, 1}, {Word{}, -1}};
      rhs = ring_add(rhs, ring_mul(fox_derivative(w, j), xm1));
    }
    failures += lhs != rhs;
  }
  CHECK(failures == 0);
}

TEST_CASE("property: product rule, reduction, abelianization, t-normal round trip") {
  std::mt19937 rng(11);
  auto p = pencil3();
  auto rnd = [&] {
    Word raw;
    int len = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int i = 0; i < len; ++i) {
      int x = std::uniform_int_distribution<int>(1, 3)(rng);
      raw.push_back(rng() % 2 ? x : -x);
    }
    return raw;
  };
  SplittingChoice s{p.parse_word("c a")};
  for (int n = 0; n < 300; ++n) {
    Word raw = rnd();
    Word u = free_reduce(raw), v = free_reduce(rnd());
    CHECK(free_reduce(u) == u);
    CHECK(u.size() <= raw.size());
    for (int j = 0; j < 3; ++j) {
      auto lhs = fox_derivative(concat(u, v), j);
      auto rhs = ring_add(fox_derivative(u, j), ring_mul({{u, 1}}, fox_derivative(v, j)));
      CHECK(lhs == rhs);
    }
    auto au = abelianize(u, p), av = abelianize(v, p), auv = abelianize(concat(u, v), p);
    for (int j = 0; j < 3; ++j) CHECK(auv[j] == au[j] + av[j]);
    auto [k, e] = t_normal_form(u, s, p);
    CHECK(p.psi(k) == 0);
    CHECK(concat(k, power(s.section_word, static_cast<int>(e))) == u);
  }
}
