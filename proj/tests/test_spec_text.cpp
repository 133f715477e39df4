#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pocfrob/spec_text.hpp"

using namespace pocfrob;

TEST_CASE("frobenius specs parse and render canonically") {
  const auto parsed = parse_spec("H(11,1,2):SL(2,5)");
  REQUIRE(std::holds_alternative<FrobeniusSpec>(parsed));
  const auto& s = std::get<FrobeniusSpec>(parsed);
  CHECK(s.kernel == HomocyclicKernel{11, 1, 2});
  CHECK(s.complement == ComplementSpec::sl2_5());
  CHECK(render_spec(s) == "H(11,1,2):SL(2,5)");

  const auto s648 = std::get<FrobeniusSpec>(parse_spec("H(3,2,2):C8"));
  CHECK(s648.order() == 648);
}

TEST_CASE("complement specs") {
  CHECK(std::get<ComplementSpec>(parse_spec("C24")) == ComplementSpec::cyclic(24));
  CHECK(std::get<ComplementSpec>(parse_spec("Q8xC3")) == ComplementSpec::quat_cyclic(3, 3));
  CHECK(std::get<ComplementSpec>(parse_spec("Q16xC5")) == ComplementSpec::quat_cyclic(4, 5));
  CHECK(std::get<ComplementSpec>(parse_spec("M(3,8,2)")) == ComplementSpec::metacyclic(3, 8, 2));
  CHECK(std::get<ComplementSpec>(parse_spec("SL(2,3)")) == ComplementSpec::sl2_3());
}

TEST_CASE("whitespace insensitivity") {
  const auto a = parse_spec("H(11,1,2):SL(2,5)");
  const auto b = parse_spec("  H( 11 , 1 , 2 ) :  SL(2,5)  ");
  CHECK(render_spec(std::get<FrobeniusSpec>(a)) == render_spec(std::get<FrobeniusSpec>(b)));
  CHECK(std::get<ComplementSpec>(parse_spec(" M( 3, 8 , 2 )")) ==
        ComplementSpec::metacyclic(3, 8, 2));
}

TEST_CASE("round trips") {
  for (const char* text : {"H(3,1,1):C2", "H(5,2,2):M(3,8,2)", "H(3,1,4):Q16xC5",
                           "H(11,3,2):SL(2,5)", "C288", "Q32xC9", "M(9,32,8)", "SL(2,3)"}) {
    const auto parsed = parse_spec(text);
    const std::string rendered = std::holds_alternative<FrobeniusSpec>(parsed)
                                     ? render_spec(std::get<FrobeniusSpec>(parsed))
                                     : render_spec(std::get<ComplementSpec>(parsed));
    CHECK(rendered == text);
  }
}

TEST_CASE("generated specs round-trip") {
  std::mt19937_64 rng(20260810);
  auto pick = [&](u64 lo, u64 hi) { return lo + rng() % (hi - lo + 1); };
  const u64 odd_primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
  const std::pair<u64, u64> metas[] = {{3, 8}, {3, 16}, {5, 16}, {9, 32}, {5, 24}, {15, 8},
                                       {25, 96}, {45, 8}, {7, 6}, {7, 3}};

  for (int i = 0; i < 500; ++i) {
    ComplementSpec comp;
    switch (pick(0, 4)) {
      case 0: comp = ComplementSpec::cyclic(pick(1, 300)); break;
      case 1: comp = ComplementSpec::quat_cyclic(pick(3, 6), 2 * pick(0, 10) + 1); break;
      case 2: {
        const auto& [alpha, beta] = metas[pick(0, std::size(metas) - 1)];
        // any valid twist: gamma with gamma^beta = 1 mod alpha, gcd(gamma-1, alpha) = 1
        std::vector<u64> twists;
        for (u64 g = 2; g < alpha; ++g) {
          if (gcd_u64(alpha, g - 1) == 1 && pow_mod(g, beta, alpha) == 1) twists.push_back(g);
        }
        if (twists.empty()) {
          comp = ComplementSpec::cyclic(6);
        } else {
          comp = ComplementSpec::metacyclic(alpha, beta, twists[pick(0, twists.size() - 1)]);
        }
        break;
      }
      case 3: comp = ComplementSpec::sl2_3(); break;
      default: comp = ComplementSpec::sl2_5(); break;
    }
    validate(comp);
    const std::string ctext = render_spec(comp);
    CHECK(std::get<ComplementSpec>(parse_spec(ctext)) == comp);

    const u64 p = odd_primes[pick(0, std::size(odd_primes) - 1)];
    if (gcd_u64(p, comp.order()) != 1 || comp.order() < 2) continue;
    const FrobeniusSpec s{{p, static_cast<u32>(pick(1, 4)), static_cast<u32>(pick(1, 4))}, comp};
    const std::string stext = render_spec(s);
    const auto back = parse_spec(stext);
    REQUIRE(std::holds_alternative<FrobeniusSpec>(back));
    CHECK(std::get<FrobeniusSpec>(back) == s);
    CHECK(render_spec(std::get<FrobeniusSpec>(back)) == stext);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_spec("X(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("H(3,1):C2"), ParseError);
  CHECK_THROWS_AS(parse_spec("C"), ParseError);
  CHECK_THROWS_AS(parse_spec("C24 extra"), ParseError);
  CHECK_THROWS_AS(parse_spec("M(3,8)"), ParseError);
  try {
    parse_spec("H(3,1,1)C2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("semantic errors are domain errors") {
  CHECK_THROWS_AS(parse_spec("H(4,1,1):C3"), std::domain_error);   // 4 not prime
  CHECK_THROWS_AS(parse_spec("H(3,1,1):C3"), std::domain_error);   // gcd(p,|H|) != 1
  CHECK_THROWS_AS(parse_spec("Q6xC5"), std::domain_error);         // 6 not a 2-power
  CHECK_THROWS_AS(parse_spec("Q8xC4"), std::domain_error);         // even cyclic factor
  CHECK_THROWS_AS(parse_spec("M(4,2,3)"), std::domain_error);      // gcd(alpha,beta) != 1
  CHECK_THROWS_AS(parse_spec("M(5,6,2)"), std::domain_error);      // 2^6 != 1 mod 5
  CHECK_THROWS_AS(parse_spec("C0"), std::domain_error);
}
