#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pocfrob/numtheory.hpp"

namespace pocfrob {

/// Exponential-Diophantine families, each with a provably finite solution
/// set. Each solver is a bounded exhaustive enumerator: `bound` caps every
/// power value appearing in the equation, so exponents are bounded implicitly.
///
///   CONS_PP      p^a - q^b = 1, p,q prime, a,b >= 2; tuples (p,q,a,b)
///   DIFF_2_3     2^a - 3^b = 1; tuples (a,b)
///   DIFF_3_2     3^b - 2^a = 1; tuples (a,b)
///   DIFF_23_23   2^x 3^y - 2^u 3^v = 1; tuples (x,y,u,v)
///   DIFF_2Q      2^x q^y - 2^u q^v = 1 for a given odd prime q
///   DIFF_23_25   2^x 3^y - 2^u 5^v = 1; tuples (x,y,u,v)
///   DIFF_25_23   2^u 5^v - 2^x 3^y = 1; tuples (x,y,u,v)
///   SANDWICH_23  p >= 2 with p-1 and p+1 both {2,3}-numbers; tuples (p)
///   SANDWICH_2Q  n >= 2 with n^2-1 divisible by 2 and q and no other prime
///   SQUARE_235   n >= 2 with n^2-1 divisible by 2, 3, 5 and no other prime
///   DIO240       p^r - 1 = 240 q^m, p,q prime > 5, r > 1, q-1 | 240, q∤240;
///                tuples (p,r,q,m)
enum class DiophantineTag {
  ConsPP,
  Diff2_3,
  Diff3_2,
  Diff23_23,
  Diff2Q,
  Diff23_25,
  Diff25_23,
  Sandwich23,
  Sandwich2Q,
  Square235,
  Dio240,
};

struct DiophantineFamily {
  DiophantineTag tag;
  std::optional<u64> q;  // odd prime, required exactly for DIFF_2Q/SANDWICH_2Q
};

/// All solutions within the bound, sorted lexicographically.
std::vector<std::vector<u64>> solve_family(const DiophantineFamily& family, u64 bound);

/// Tag <-> text, spelled as in the CLI (`CONS_PP`, `DIO240`, ...).
const char* diophantine_tag_name(DiophantineTag tag);
std::optional<DiophantineTag> diophantine_tag_from_name(const std::string& name);

}  // namespace pocfrob
