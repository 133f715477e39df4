#pragma once

#include <map>

#include "pocfrob/numtheory.hpp"

namespace pocfrob {

/// Element-order census of a finite group: order d -> number of elements of
/// order d. Only realized orders are stored; counts sum to group_order.
struct OrderCensus {
  std::map<u64, u64> entries;
  u64 group_order = 1;

  bool operator==(const OrderCensus&) const = default;
};

/// Throws std::domain_error when the census invariants fail.
void validate(const OrderCensus& c);

/// Cyclic group of order n: each divisor d contributes phi(d).
OrderCensus cyclic_census(u64 n);

/// Homocyclic group of rank r and exponent p^k, p an odd prime:
/// p^i -> p^{r(i-1)} (p^r - 1).
OrderCensus homocyclic_census(u64 p, u32 k, u32 r);

/// Generalised quaternion group of order 2^n, n >= 3:
/// one element each of orders 1 and 2, 2^{n-1}+2 of order 4, 2^{k-1} of
/// order 2^k for 3 <= k < n.
OrderCensus genquat_census(u32 n);

/// Direct product census for coprime orders: c_{xy} = a[x] * b[y].
OrderCensus product_census(const OrderCensus& a, const OrderCensus& b);

/// Census of a Frobenius group assembled from kernel and complement censuses
/// with coprime orders: kernel entries pass through; each complement order
/// d > 1 contributes |K| * c_H(d).
OrderCensus frobenius_census(const OrderCensus& kernel, const OrderCensus& complement);

/// Metacyclic group <x,y | x^alpha, y^beta, x^y = x^gamma> by direct
/// enumeration of normal-form pairs.
OrderCensus metacyclic_census(u64 alpha, u64 beta, u64 gamma);

/// Perfect order classes: every count divides the group order.
bool is_poc(const OrderCensus& c);

struct DivisibilityReport {
  bool phi_ok = false;   // phi(d) divides the count at every realized order d
  bool pm1_ok = false;   // p-1 | |G| for every prime p | |G|, when POC holds
};

DivisibilityReport divisibility_report(const OrderCensus& c);

}  // namespace pocfrob
