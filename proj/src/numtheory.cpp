#include "pocfrob/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace pocfrob {

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 ipow(u64 base, u32 exp) {
  u64 r = 1;
  for (u32 i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base)
      throw std::overflow_error("ipow: overflow");
    r *= base;
  }
  return r;
}

namespace {

constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Trial-division bound; cofactors below its square are prime.
constexpr u64 kTrialBound = 65536;

u64 rho_brent(u64 n) {
  // n odd composite, no factor <= kTrialBound. Fixed parameters keep the
  // returned factor deterministic.
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 x = 2, y = 2, d = 1, q = 1, ys = y, r = 1;
    const u64 m = 128;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        const u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = gcd_u64(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      y = ys;
      while (d == 1) {
        y = f(y);
        d = gcd_u64(x > y ? x - y : y - x, n);
      }
    }
    if (d != n) return d;
  }
}

bool is_pow2(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kMrBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kMrBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FactoredInteger factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  FactoredInteger out;
  out.value = n;
  std::map<u64, u32> acc;
  u64 m = n;
  for (u64 p : {u64(2), u64(3), u64(5)}) {
    while (m % p == 0) {
      ++acc[p];
      m /= p;
    }
  }
  for (u64 p = 7; p <= kTrialBound && p * p <= m; p += 2) {
    while (m % p == 0) {
      ++acc[p];
      m /= p;
    }
  }
  if (m > 1) {
    std::vector<u64> stack{m};
    while (!stack.empty()) {
      u64 v = stack.back();
      stack.pop_back();
      if (v < (kTrialBound + 1) * (kTrialBound + 1) || is_prime(v)) {
        ++acc[v];
        continue;
      }
      u64 d = rho_brent(v);
      stack.push_back(d);
      stack.push_back(v / d);
    }
  }
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be positive");
  u64 r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    r *= ipow(p, e - 1) * (p - 1);
  }
  return r;
}

std::optional<std::pair<u64, u32>> prime_power_decompose(u64 n) {
  if (n < 2) throw std::domain_error("prime_power_decompose: n must be >= 2");
  const auto f = factorize(n);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

bool is_pi_number(u64 n, const std::vector<u64>& pi) {
  if (n == 0) throw std::domain_error("is_pi_number: n must be positive");
  for (u64 p : pi) {
    if (!is_prime(p)) throw std::domain_error("is_pi_number: set member is not prime");
  }
  for (u64 p : pi) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

bool is_pierpont_prime(u64 p) {
  return is_prime(p) && is_pi_number(p - 1, {2, 3});
}

std::vector<u64> divisors(u64 n) {
  const auto f = factorize(n);
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t sz = out.size();
    u64 pk = 1;
    for (u32 i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 mod_inverse(u64 a, u64 m) {
  if (m == 0) throw std::domain_error("mod_inverse: zero modulus");
  if (m == 1) return 0;
  using i128 = __int128;
  i128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    i128 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

namespace {

void validate_query(const ZsigmondyQuery& q) {
  if (q.epsilon != 1 && q.epsilon != -1)
    throw std::domain_error("zsigmondy: epsilon must be +1 or -1");
  if (q.n < 2) throw std::domain_error("zsigmondy: n must be >= 2");
  if (q.b == 0 || q.a <= q.b) throw std::domain_error("zsigmondy: need a > b >= 1");
  if (gcd_u64(q.a, q.b) != 1) throw std::domain_error("zsigmondy: a and b must be coprime");
}

}  // namespace

bool is_zsigmondy_named_exception(const ZsigmondyQuery& q) {
  validate_query(q);
  if (q.epsilon == 1) return q.a == 2 && q.b == 1 && q.n == 3;
  if (q.a == 2 && q.b == 1 && q.n == 6) return true;
  return q.n == 2 && is_pow2(q.a + q.b);
}

ZsigmondyResult zsigmondy(const ZsigmondyQuery& q) {
  validate_query(q);
  u128 pa = 1, pb = 1;
  for (u32 i = 0; i < q.n; ++i) {
    if (pa > (u128(1) << 126) / q.a) throw std::domain_error("zsigmondy: value out of range");
    pa *= q.a;
    pb *= q.b;
  }
  const u128 value = (q.epsilon == 1) ? pa + pb : pa - pb;
  if (value >> 64) throw std::domain_error("zsigmondy: value exceeds 64-bit factorization range");

  ZsigmondyResult res;
  for (const auto& [p, e] : factorize(static_cast<u64>(value)).factors) {
    (void)e;
    bool primitive = true;
    for (u32 k = 1; k < q.n && primitive; ++k) {
      const u64 term = (pow_mod(q.a, k, p) + (q.epsilon == 1 ? pow_mod(q.b, k, p)
                                                             : p - pow_mod(q.b, k, p))) % p;
      if (term == 0) primitive = false;
    }
    if (primitive) res.primitive_primes.push_back(p);
  }
  return res;
}

}  // namespace pocfrob
