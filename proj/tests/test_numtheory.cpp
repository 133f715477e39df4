#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pocfrob/numtheory.hpp"

using namespace pocfrob;

TEST_CASE("euler_phi matches the unit-count oracle up to 10^4") {
  for (u64 n = 1; n <= 10000; ++n) {
    u64 count = 0;
    for (u64 m = 1; m <= n; ++m) {
      if (gcd_u64(m, n) == 1) ++count;
    }
    REQUIRE(euler_phi(n) == count);
  }
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(288) == 96);
  CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(240).factors ==
        std::vector<std::pair<u64, u32>>{{2, 4}, {3, 1}, {5, 1}});
  CHECK(factorize(14520).factors ==
        std::vector<std::pair<u64, u32>>{{2, 3}, {3, 1}, {5, 1}, {11, 2}});

  // product of two primes above the trial-division bound
  const u64 p = 1000003, q = 1000033;
  const auto f = factorize(p * q);
  CHECK(f.factors == std::vector<std::pair<u64, u32>>{{p, 1}, {q, 1}});

  for (u64 n : {u64(2), u64(97), u64(360), u64(812990017200)}) {
    u64 prod = 1;
    for (const auto& [pp, e] : factorize(n).factors) {
      CHECK(is_prime(pp));
      prod *= ipow(pp, e);
    }
    CHECK(prod == n);
  }
}

TEST_CASE("prime_power_decompose") {
  CHECK(prime_power_decompose(121) == std::pair<u64, u32>{11, 2});
  CHECK(prime_power_decompose(12) == std::nullopt);
  CHECK(prime_power_decompose(2401) == std::pair<u64, u32>{7, 4});
  CHECK(prime_power_decompose(7) == std::pair<u64, u32>{7, 1});
  CHECK_THROWS_AS(prime_power_decompose(1), std::domain_error);
}

TEST_CASE("pi-numbers") {
  CHECK(is_pi_number(12, {2, 3, 61}));
  CHECK(is_pi_number(1, {}));
  CHECK(is_pi_number(2400, {2, 3, 5}));
  CHECK_FALSE(is_pi_number(14, {2, 3}));
  CHECK_THROWS_AS(is_pi_number(6, {4}), std::domain_error);
}

TEST_CASE("Pierpont primes") {
  CHECK(is_pierpont_prime(7));
  CHECK(is_pierpont_prime(2));
  CHECK_FALSE(is_pierpont_prime(23));  // 22 = 2*11
  CHECK_FALSE(is_pierpont_prime(15));
  std::vector<u64> got;
  for (u64 p = 2; p < 200; ++p) {
    if (is_pierpont_prime(p)) got.push_back(p);
  }
  CHECK(got == std::vector<u64>{2, 3, 5, 7, 13, 17, 19, 37, 73, 97, 109, 163, 193});
}

TEST_CASE("zsigmondy examples") {
  CHECK(zsigmondy({2, 1, 4, -1}).primitive_primes == std::vector<u64>{5});
  CHECK(zsigmondy({2, 1, 6, -1}).exception());
  CHECK(zsigmondy({2, 1, 3, 1}).exception());
  // 241^5 - 1 = 2^4 * 3 * 5^2 * 61 * 11106421; 241 has order 5 mod 61, so 61
  // divides no earlier term and is primitive, as is the large prime factor.
  CHECK(zsigmondy({241, 1, 5, -1}).primitive_primes == std::vector<u64>{61, 11106421});
  CHECK(is_prime(11106421));
  CHECK_THROWS_AS(zsigmondy({4, 2, 3, -1}), std::domain_error);  // gcd != 1
  CHECK_THROWS_AS(zsigmondy({2, 3, 3, -1}), std::domain_error);  // a <= b
  CHECK_THROWS_AS(zsigmondy({2, 1, 1, -1}), std::domain_error);  // n < 2
}

TEST_CASE("named exceptions") {
  CHECK(is_zsigmondy_named_exception({2, 1, 3, 1}));
  CHECK(is_zsigmondy_named_exception({2, 1, 6, -1}));
  CHECK(is_zsigmondy_named_exception({3, 1, 2, -1}));  // 3+1 = 4
  CHECK(is_zsigmondy_named_exception({7, 1, 2, -1}));  // 7+1 = 8
  CHECK(is_zsigmondy_named_exception({5, 3, 2, -1}));  // 5+3 = 8
  CHECK_FALSE(is_zsigmondy_named_exception({5, 1, 2, -1}));
  CHECK_FALSE(is_zsigmondy_named_exception({2, 1, 6, 1}));
}

TEST_CASE("primitive divisors divide no earlier term; q = 1 mod n for b=1, eps=-1") {
  for (u64 a = 2; a <= 20; ++a) {
    for (u64 b = 1; b < a; ++b) {
      if (gcd_u64(a, b) != 1) continue;
      for (u32 n = 2; n <= 12; ++n) {
        for (int eps : {1, -1}) {
          const auto res = zsigmondy({a, b, n, eps});
          for (u64 q : res.primitive_primes) {
            const u64 term =
                (pow_mod(a, n, q) + (eps == 1 ? pow_mod(b, n, q) : q - pow_mod(b, n, q))) % q;
            REQUIRE(term == 0);
            for (u32 k = 1; k < n; ++k) {
              const u64 t =
                  (pow_mod(a, k, q) + (eps == 1 ? pow_mod(b, k, q) : q - pow_mod(b, k, q))) % q;
              REQUIRE(t != 0);
            }
            if (b == 1 && eps == -1) REQUIRE(q % n == 1);
          }
          if (res.exception()) {
            REQUIRE(is_zsigmondy_named_exception({a, b, n, eps}));
          }
        }
      }
    }
  }
}

TEST_CASE("divisors and modular inverse") {
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<u64>{1});
  for (u64 m : {u64(7), u64(25), u64(243), u64(1000003)}) {
    for (u64 a = 1; a < std::min<u64>(m, 50); ++a) {
      if (gcd_u64(a, m) != 1) continue;
      CHECK(mul_mod(a, mod_inverse(a, m), m) == 1 % m);
    }
  }
}
