#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pocfrob {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Positive integer together with its canonical factorization,
/// primes strictly increasing, exponents >= 1.
struct FactoredInteger {
  u64 value = 1;
  std::vector<std::pair<u64, u32>> factors;
};

u64 gcd_u64(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// base^exp with overflow detection (throws std::overflow_error).
u64 ipow(u64 base, u32 exp);

/// Deterministic primality for the full 64-bit range.
bool is_prime(u64 n);

FactoredInteger factorize(u64 n);

u64 euler_phi(u64 n);

/// (p, e) with p^e = n when n >= 2 is a prime power, otherwise empty.
std::optional<std::pair<u64, u32>> prime_power_decompose(u64 n);

/// True iff every prime divisor of n lies in pi (n = 1 vacuously true).
/// All members of pi must be prime.
bool is_pi_number(u64 n, const std::vector<u64>& pi);

/// Primes of the form 1 + 2^a 3^b.
bool is_pierpont_prime(u64 p);

/// Ascending list of all divisors.
std::vector<u64> divisors(u64 n);

/// Inverse of a modulo m, gcd(a, m) = 1 required.
u64 mod_inverse(u64 a, u64 m);

/// Parameters of a^n + eps*b^n with gcd(a,b) = 1, a > b, n >= 2, eps = +-1.
struct ZsigmondyQuery {
  u64 a = 2;
  u64 b = 1;
  u32 n = 2;
  int epsilon = -1;
};

/// Primitive prime divisors of a^n + eps*b^n: primes dividing it that divide
/// no earlier term a^k + eps*b^k (1 <= k < n). An empty set is the exception
/// marker; away from the named exceptions non-emptiness is a theorem.
struct ZsigmondyResult {
  std::vector<u64> primitive_primes;
  bool exception() const { return primitive_primes.empty(); }
};

ZsigmondyResult zsigmondy(const ZsigmondyQuery& q);

/// The classical excluded triples: (2,1,3) for eps=+1; (2,1,6) for eps=-1;
/// and n=2, eps=-1 with a+b a power of two.
bool is_zsigmondy_named_exception(const ZsigmondyQuery& q);

}  // namespace pocfrob
