#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pocfrob/diophantine.hpp"

using namespace pocfrob;

namespace {

using Sols = std::vector<std::vector<u64>>;

Sols solve(DiophantineTag tag, u64 bound, std::optional<u64> q = std::nullopt) {
  return solve_family({tag, q}, bound);
}

Sols singles(std::initializer_list<u64> xs) {
  Sols out;
  for (u64 x : xs) out.push_back({x});
  return out;
}

}  // namespace

TEST_CASE("consecutive proper prime powers") {
  CHECK(solve(DiophantineTag::ConsPP, 10000) == Sols{{3, 2, 2, 3}});
  CHECK(solve(DiophantineTag::ConsPP, 1000000) == Sols{{3, 2, 2, 3}});
}

TEST_CASE("2^a - 3^b = 1 and 3^b - 2^a = 1") {
  CHECK(solve(DiophantineTag::Diff2_3, 1000000) == Sols{{1, 0}, {2, 1}});
  CHECK(solve(DiophantineTag::Diff3_2, 1000000) == Sols{{1, 1}, {3, 2}});
}

TEST_CASE("consecutive {2,3}-numbers") {
  Sols expected{{0, 1, 1, 0}, {0, 2, 3, 0}, {1, 0, 0, 0}, {2, 0, 0, 1}};
  CHECK(solve(DiophantineTag::Diff23_23, 1000000) == expected);

  // brute-force oracle over a small box
  Sols brute;
  for (u64 x = 0; x < 12; ++x)
    for (u64 y = 0; y < 8; ++y)
      for (u64 u = 0; u < 12; ++u)
        for (u64 v = 0; v < 8; ++v) {
          const u64 A = ipow(2, u32(x)) * ipow(3, u32(y));
          const u64 B = ipow(2, u32(u)) * ipow(3, u32(v));
          if (A == B + 1) brute.push_back({x, y, u, v});
        }
  std::sort(brute.begin(), brute.end());
  CHECK(solve(DiophantineTag::Diff23_23, 10000) == brute);
}

TEST_CASE("consecutive {2,q}-numbers per parameter") {
  // Mersenne q = 3 = 2^2 - 1: (1,0,0,0) and (2,0,0,1); plus the q = 3 pair
  CHECK(solve(DiophantineTag::Diff2Q, 100000, 3) ==
        Sols{{0, 1, 1, 0}, {0, 2, 3, 0}, {1, 0, 0, 0}, {2, 0, 0, 1}});
  // Mersenne q = 7 = 2^3 - 1
  CHECK(solve(DiophantineTag::Diff2Q, 100000, 7) == Sols{{1, 0, 0, 0}, {3, 0, 0, 1}});
  // Fermat q = 5 = 2^{2^1} + 1
  CHECK(solve(DiophantineTag::Diff2Q, 100000, 5) == Sols{{0, 1, 2, 0}, {1, 0, 0, 0}});
  // generic q = 11
  CHECK(solve(DiophantineTag::Diff2Q, 100000, 11) == Sols{{1, 0, 0, 0}});
  CHECK_THROWS_AS(solve(DiophantineTag::Diff2Q, 100, 9), std::domain_error);
  CHECK_THROWS_AS(solve(DiophantineTag::Diff2Q, 100), std::domain_error);
  CHECK_THROWS_AS(solve(DiophantineTag::Diff2_3, 100, 3), std::domain_error);
}

TEST_CASE("2^x 3^y - 2^u 5^v = 1") {
  Sols expected{{0, 1, 1, 0}, {0, 2, 3, 0}, {0, 4, 4, 1}, {1, 0, 0, 0}, {1, 1, 0, 1}};
  CHECK(solve(DiophantineTag::Diff23_25, 1000000) == expected);
}

TEST_CASE("2^u 5^v - 2^x 3^y = 1") {
  // (x,y,u,v); note (2,0,0,1) is the solution 5 - 4 = 1
  Sols expected{{0, 0, 1, 0}, {0, 1, 2, 0}, {0, 2, 1, 1}, {2, 0, 0, 1}, {3, 1, 0, 2}};
  CHECK(solve(DiophantineTag::Diff25_23, 1000000) == expected);
  for (const auto& s : expected) {
    CHECK(ipow(2, u32(s[2])) * ipow(5, u32(s[3])) ==
          ipow(2, u32(s[0])) * ipow(3, u32(s[1])) + 1);
  }
}

TEST_CASE("integers sandwiched by {2,3}-numbers") {
  CHECK(solve(DiophantineTag::Sandwich23, 100000) == singles({2, 3, 5, 7, 17}));
}

TEST_CASE("n^2 - 1 with prescribed prime support") {
  CHECK(solve(DiophantineTag::Square235, 100000) == singles({11, 19, 31, 49, 161}));
  // {2,q} variants
  CHECK(solve(DiophantineTag::Sandwich2Q, 100000, 3) == singles({5, 7, 17}));
  CHECK(solve(DiophantineTag::Sandwich2Q, 100000, 5) == singles({9}));
  CHECK(solve(DiophantineTag::Sandwich2Q, 100000, 7) == singles({15}));
}

TEST_CASE("p^r - 1 = 240 q^m") {
  CHECK(solve(DiophantineTag::Dio240, 1000000) == Sols{{11, 4, 61, 1}, {41, 2, 7, 1}});
  CHECK(ipow(11, 4) == 1 + 240 * 61);
  CHECK(ipow(41, 2) == 1 + 240 * 7);
}

TEST_CASE("solutions are stable once the bound passes the largest one") {
  const std::vector<std::pair<DiophantineTag, std::optional<u64>>> families = {
      {DiophantineTag::ConsPP, std::nullopt},     {DiophantineTag::Diff2_3, std::nullopt},
      {DiophantineTag::Diff3_2, std::nullopt},    {DiophantineTag::Diff23_23, std::nullopt},
      {DiophantineTag::Diff2Q, 3},                {DiophantineTag::Diff2Q, 5},
      {DiophantineTag::Diff23_25, std::nullopt},  {DiophantineTag::Diff25_23, std::nullopt},
      {DiophantineTag::Sandwich23, std::nullopt}, {DiophantineTag::Sandwich2Q, 3},
      {DiophantineTag::Sandwich2Q, 5},            {DiophantineTag::Square235, std::nullopt},
      {DiophantineTag::Dio240, std::nullopt},
  };
  for (const auto& [tag, q] : families) {
    const auto lo = solve_family({tag, q}, 100000);
    const auto hi = solve_family({tag, q}, 200000);
    CHECK(lo == hi);
  }
}

TEST_CASE("bound validation and tag names") {
  CHECK_THROWS_AS(solve(DiophantineTag::ConsPP, 1), std::domain_error);
  CHECK(diophantine_tag_from_name("DIO240") == DiophantineTag::Dio240);
  CHECK(diophantine_tag_from_name("nope") == std::nullopt);
  for (auto t : {DiophantineTag::ConsPP, DiophantineTag::Sandwich2Q, DiophantineTag::Dio240}) {
    CHECK(diophantine_tag_from_name(diophantine_tag_name(t)) == t);
  }
}
