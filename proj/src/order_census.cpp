#include "pocfrob/order_census.hpp"

#include <stdexcept>
#include <vector>

namespace pocfrob {

void validate(const OrderCensus& c) {
  if (c.entries.empty() || c.entries.begin()->first != 1 || c.entries.begin()->second != 1)
    throw std::domain_error("census: exactly one element of order 1 required");
  u64 sum = 0;
  for (const auto& [d, count] : c.entries) {
    if (d == 0 || count == 0) throw std::domain_error("census: zero key or count");
    sum += count;
  }
  if (sum != c.group_order) throw std::domain_error("census: counts do not sum to the group order");
}

OrderCensus cyclic_census(u64 n) {
  if (n == 0) throw std::domain_error("cyclic_census: n must be positive");
  OrderCensus c;
  c.group_order = n;
  for (u64 d : divisors(n)) c.entries[d] = euler_phi(d);
  return c;
}

OrderCensus homocyclic_census(u64 p, u32 k, u32 r) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("homocyclic_census: p must be an odd prime");
  if (k == 0 || r == 0) throw std::domain_error("homocyclic_census: k, r must be positive");
  OrderCensus c;
  c.group_order = ipow(p, k * r);
  c.entries[1] = 1;
  const u64 pr = ipow(p, r);
  for (u32 i = 1; i <= k; ++i) {
    c.entries[ipow(p, i)] = ipow(pr, i - 1) * (pr - 1);
  }
  return c;
}

OrderCensus genquat_census(u32 n) {
  if (n < 3) throw std::domain_error("genquat_census: n must be >= 3");
  OrderCensus c;
  c.group_order = u64(1) << n;
  c.entries[1] = 1;
  c.entries[2] = 1;
  c.entries[4] = (u64(1) << (n - 1)) + 2;
  for (u32 k = 3; k < n; ++k) c.entries[u64(1) << k] = u64(1) << (k - 1);
  return c;
}

OrderCensus product_census(const OrderCensus& a, const OrderCensus& b) {
  validate(a);
  validate(b);
  if (gcd_u64(a.group_order, b.group_order) != 1)
    throw std::domain_error("product_census: group orders must be coprime");
  OrderCensus c;
  c.group_order = a.group_order * b.group_order;
  for (const auto& [x, cx] : a.entries)
    for (const auto& [y, cy] : b.entries) c.entries[x * y] += cx * cy;
  return c;
}

OrderCensus frobenius_census(const OrderCensus& kernel, const OrderCensus& complement) {
  validate(kernel);
  validate(complement);
  if (gcd_u64(kernel.group_order, complement.group_order) != 1)
    throw std::domain_error("frobenius_census: kernel and complement orders must be coprime");
  OrderCensus c;
  c.group_order = kernel.group_order * complement.group_order;
  c.entries = kernel.entries;
  for (const auto& [d, count] : complement.entries) {
    if (d == 1) continue;
    if (c.entries.count(d))
      throw std::logic_error("frobenius_census: kernel/complement order collision");
    c.entries[d] = kernel.group_order * count;
  }
  return c;
}

OrderCensus metacyclic_census(u64 alpha, u64 beta, u64 gamma) {
  if (alpha == 0 || beta == 0) throw std::domain_error("metacyclic_census: zero parameter");
  if (alpha == 1) return cyclic_census(beta);
  if (gcd_u64(alpha, beta) != 1 || gcd_u64(alpha, gamma >= 1 ? gamma - 1 : alpha) != 1 ||
      pow_mod(gamma, beta, alpha) != 1)
    throw std::domain_error("metacyclic_census: invalid presentation parameters");
  if (alpha * beta > 1000000)
    throw std::domain_error("metacyclic_census: group order too large to enumerate");

  // (x^a y^b)(x^c y^d) = x^{a + c*delta^b} y^{b+d} with delta = gamma^{-1} mod alpha.
  const u64 delta = mod_inverse(gamma % alpha, alpha);
  std::vector<u64> dpow(beta);
  dpow[0] = 1;
  for (u64 i = 1; i < beta; ++i) dpow[i] = mul_mod(dpow[i - 1], delta, alpha);

  OrderCensus c;
  c.group_order = alpha * beta;
  for (u64 a = 0; a < alpha; ++a) {
    for (u64 b = 0; b < beta; ++b) {
      u64 ca = a, cb = b, order = 1;
      while (ca != 0 || cb != 0) {
        ca = (ca + mul_mod(a, dpow[cb], alpha)) % alpha;
        cb = (cb + b) % beta;
        ++order;
      }
      ++c.entries[order];
    }
  }
  return c;
}

bool is_poc(const OrderCensus& c) {
  validate(c);
  for (const auto& [d, count] : c.entries) {
    (void)d;
    if (c.group_order % count != 0) return false;
  }
  return true;
}

DivisibilityReport divisibility_report(const OrderCensus& c) {
  validate(c);
  DivisibilityReport r;
  r.phi_ok = true;
  for (const auto& [d, count] : c.entries) {
    if (count % euler_phi(d) != 0) r.phi_ok = false;
  }
  r.pm1_ok = true;
  if (is_poc(c)) {
    for (const auto& [p, e] : factorize(c.group_order).factors) {
      (void)e;
      if (c.group_order % (p - 1) != 0) r.pm1_ok = false;
    }
  }
  return r;
}

}  // namespace pocfrob
