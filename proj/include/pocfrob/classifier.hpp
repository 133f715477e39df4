#pragma once

#include <string>
#include <vector>

#include "pocfrob/complement_spec.hpp"
#include "pocfrob/order_census.hpp"

namespace pocfrob {

/// Frobenius group parameters: homocyclic kernel plus a complement shape.
struct FrobeniusSpec {
  HomocyclicKernel kernel;
  ComplementSpec complement;

  u64 order() const { return kernel.order() * complement.order(); }
  bool operator==(const FrobeniusSpec&) const = default;
};

void validate(const FrobeniusSpec& s);

/// Which classification result justifies a verdict.
enum class Justification {
  ThmA,             // order-class structure of Frobenius groups (iff test)
  ThmB,             // insoluble case: homocyclic 11-group of rank 2 with SL(2,5)
  ThmC,             // nilpotent complements: cyclic families
  ThmD,             // non-nilpotent biprimary complements: five families
  ThmE,             // soluble {2,3,5} complements of order divisible by 30
  PropCyclic,       // cyclic groups: even {2,3}-order
  PropCyclicCompl,  // cyclic-complement Frobenius groups
  ThmNilpCompl,     // non-abelian nilpotent complements with POC
  ThmNonNilpCompl,  // nilpotent complements in POC Frobenius groups are cyclic
  BruteForce,       // decided by an exact census
  Unclassified,     // outside the classified families
};

const char* tag_name(Justification j);   // "ThmB"
const char* tag_label(Justification j);  // "Theorem B"

struct Verdict {
  bool poc = false;
  Justification justification = Justification::Unclassified;
  std::string details;
};

/// Exact census of the complement as a standalone group (symbolic where a
/// closed form exists, presentation enumeration for metacyclic shapes,
/// matrix brute force for SL(2,3)/SL(2,5)).
OrderCensus complement_census(const ComplementSpec& c);

/// The three-condition test: (a) complement has POC, (b) kernel homocyclic
/// over an odd prime (structural here), (c) |H| = p^r - 1. This is an
/// arithmetic test on the spec; it does not decide whether a fixed-point-free
/// action exists.
Verdict theorem_a_check(const FrobeniusSpec& s);

/// POC verdict for the complement as a standalone group.
Verdict classify_complement(const ComplementSpec& c);

/// Theorem-driven verdict for the Frobenius spec, dispatching on the
/// complement shape. Shapes outside the classified families yield an
/// explicit Unclassified verdict carrying the condition trace.
Verdict classify(const FrobeniusSpec& s);

/// (p, k) with p an odd Pierpont prime and p^k (p-1) <= max_order, sorted by
/// group order.
std::vector<std::pair<u64, u32>> pierpont_family_params(u64 max_order);

}  // namespace pocfrob
