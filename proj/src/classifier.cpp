#include "pocfrob/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "pocfrob/realize.hpp"

namespace pocfrob {

void validate(const FrobeniusSpec& s) {
  validate(s.kernel);
  validate(s.complement);
  if (s.complement.order() < 2)
    throw std::domain_error("frobenius spec: complement must be non-trivial");
  if (gcd_u64(s.kernel.p, s.complement.order()) != 1)
    throw std::domain_error("frobenius spec: kernel prime divides the complement order");
}

const char* tag_name(Justification j) {
  switch (j) {
    case Justification::ThmA: return "ThmA";
    case Justification::ThmB: return "ThmB";
    case Justification::ThmC: return "ThmC";
    case Justification::ThmD: return "ThmD";
    case Justification::ThmE: return "ThmE";
    case Justification::PropCyclic: return "PropCyclic";
    case Justification::PropCyclicCompl: return "PropCyclicCompl";
    case Justification::ThmNilpCompl: return "ThmNilpCompl";
    case Justification::ThmNonNilpCompl: return "ThmNonNilpCompl";
    case Justification::BruteForce: return "BruteForce";
    case Justification::Unclassified: return "Unclassified";
  }
  return "?";
}

const char* tag_label(Justification j) {
  switch (j) {
    case Justification::ThmA: return "Theorem A";
    case Justification::ThmB: return "Theorem B";
    case Justification::ThmC: return "Theorem C";
    case Justification::ThmD: return "Theorem D";
    case Justification::ThmE: return "Theorem E";
    case Justification::PropCyclic: return "cyclic classification";
    case Justification::PropCyclicCompl: return "cyclic complement classification";
    case Justification::ThmNilpCompl: return "nilpotent complement classification";
    case Justification::ThmNonNilpCompl: return "nilpotent complements must be cyclic";
    case Justification::BruteForce: return "brute-force census";
    case Justification::Unclassified: return "unclassified";
  }
  return "?";
}

OrderCensus complement_census(const ComplementSpec& c) {
  validate(c);
  switch (c.kind) {
    case ComplementSpec::Kind::Cyclic: return cyclic_census(c.n);
    case ComplementSpec::Kind::QuatCyclic: {
      OrderCensus q = genquat_census(static_cast<u32>(c.n));
      return c.m == 1 ? q : product_census(q, cyclic_census(c.m));
    }
    case ComplementSpec::Kind::Metacyclic: return metacyclic_census(c.alpha, c.beta, c.gamma);
    case ComplementSpec::Kind::SL2_3: {
      static const OrderCensus cached = [] {
        auto act = realize_complement(ComplementSpec::sl2_3(), 2, 5);
        if (!act) throw std::runtime_error("SL(2,3) realization failed");
        return order_census_bruteforce(group_from_matrices(5, action_elements(*act)));
      }();
      return cached;
    }
    case ComplementSpec::Kind::SL2_5: {
      static const OrderCensus cached = [] {
        auto act = realize_complement(ComplementSpec::sl2_5(), 2, 11);
        if (!act) throw std::runtime_error("SL(2,5) realization failed");
        return order_census_bruteforce(group_from_matrices(11, action_elements(*act)));
      }();
      return cached;
    }
  }
  throw std::logic_error("complement_census: unreachable");
}

Verdict theorem_a_check(const FrobeniusSpec& s) {
  validate(s);
  Verdict v;
  v.justification = Justification::ThmA;
  const bool cond_a = is_poc(complement_census(s.complement));
  const u64 target = ipow(s.kernel.p, s.kernel.r) - 1;
  const bool cond_c = s.complement.order() == target;

  std::string d;
  d += "(a) complement " + s.complement.text() + " has perfect order classes: ";
  d += cond_a ? "yes" : "no";
  d += "; (b) kernel " + s.kernel.text() + " homocyclic over an odd prime: yes";
  d += "; (c) |H| = " + std::to_string(s.complement.order()) +
       " vs p^r - 1 = " + std::to_string(target) + ": ";
  d += cond_c ? "yes" : "no";
  if (!cond_a)
    d += "; fails first at (a)";
  else if (!cond_c)
    d += "; fails first at (c)";
  v.details = std::move(d);
  v.poc = cond_a && cond_c;
  return v;
}

namespace {

bool is_23_number(u64 n) { return is_pi_number(n, {2, 3}); }

// Rank-2 cyclic families: kernel prime -> complement order p^2 - 1.
constexpr std::pair<u64, u64> kRank2Cyclic[] = {{3, 8}, {5, 24}, {7, 48}, {17, 288}};

struct ThmDForm {
  u64 p;
  u32 r;
  u64 alpha, beta;  // metacyclic with gamma = alpha - 1; alpha = 0 marks SL(2,3)
};
constexpr ThmDForm kThmDForms[] = {
    {5, 2, 0, 0}, {5, 2, 3, 8}, {7, 2, 3, 16}, {17, 2, 9, 32}, {3, 4, 5, 16}};

bool thm_d_member(const FrobeniusSpec& s) {
  for (const auto& f : kThmDForms) {
    if (s.kernel.p != f.p || s.kernel.r != f.r) continue;
    if (f.alpha == 0) {
      if (s.complement.kind == ComplementSpec::Kind::SL2_3) return true;
    } else if (s.complement.kind == ComplementSpec::Kind::Metacyclic &&
               s.complement.alpha == f.alpha && s.complement.beta == f.beta &&
               s.complement.gamma == f.alpha - 1) {
      return true;
    }
  }
  return false;
}

Verdict classify_cyclic(const FrobeniusSpec& s) {
  Verdict v;
  v.justification = Justification::PropCyclicCompl;
  const u64 n = s.complement.order();
  const u64 target = ipow(s.kernel.p, s.kernel.r) - 1;
  if (n != target) {
    v.poc = false;
    v.details = "cyclic complement of order " + std::to_string(n) + " differs from p^r - 1 = " +
                std::to_string(target);
    return v;
  }
  if (s.kernel.r == 1) {
    // cyclic kernel: p = 1 + |H| must be an odd Pierpont prime
    v.poc = is_pierpont_prime(s.kernel.p) && n % 2 == 0 && is_23_number(n);
    v.details = v.poc ? "cyclic kernel with Pierpont prime " + std::to_string(s.kernel.p) +
                            " = 1 + |H|, |H| an even {2,3}-number"
                      : std::to_string(s.kernel.p) + " = 1 + |H| is not a Pierpont prime with "
                            "|H| an even {2,3}-number";
    return v;
  }
  for (const auto& [p, h] : kRank2Cyclic) {
    if (s.kernel.p == p && s.kernel.r == 2 && n == h) {
      v.poc = true;
      v.details = "rank-2 family (p, |H|) = (" + std::to_string(p) + ", " + std::to_string(h) + ")";
      return v;
    }
  }
  v.poc = false;
  v.details = "cyclic complement with rank " + std::to_string(s.kernel.r) +
              " kernel lies outside the classified rank-1/rank-2 families";
  return v;
}

}  // namespace

Verdict classify_complement(const ComplementSpec& c) {
  validate(c);
  Verdict v;
  switch (c.kind) {
    case ComplementSpec::Kind::Cyclic: {
      v.justification = Justification::PropCyclic;
      v.poc = c.n == 1 || (c.n % 2 == 0 && is_23_number(c.n));
      v.details = v.poc ? "cyclic of order " + std::to_string(c.n) + ", an even {2,3}-number"
                        : "cyclic of order " + std::to_string(c.n) +
                              " which is not an even {2,3}-number";
      return v;
    }
    case ComplementSpec::Kind::QuatCyclic: {
      v.justification = Justification::ThmNilpCompl;
      v.poc = is_poc(complement_census(c));
      const bool in_family = (c.n == 3 && c.m > 1 && is_pi_number(c.m, {3})) ||
                             (c.n == 4 && c.m > 1 && is_pi_number(c.m, {5}));
      if (v.poc != in_family)
        throw std::logic_error("quaternion family table disagrees with the census");
      v.details = v.poc ? c.text() + " matches Q8xC_{3^k} or Q16xC_{5^k}"
                        : c.text() + " is outside the two quaternion families";
      return v;
    }
    case ComplementSpec::Kind::Metacyclic:
    case ComplementSpec::Kind::SL2_3:
    case ComplementSpec::Kind::SL2_5: {
      v.justification = Justification::BruteForce;
      v.poc = is_poc(complement_census(c));
      v.details = "exact census of " + c.text() + (v.poc ? " has" : " does not have") +
                  " perfect order classes";
      return v;
    }
  }
  throw std::logic_error("classify_complement: unreachable");
}

Verdict classify(const FrobeniusSpec& s) {
  validate(s);
  const ComplementSpec& H = s.complement;

  if (H.kind == ComplementSpec::Kind::Cyclic ||
      (H.kind == ComplementSpec::Kind::Metacyclic && H.alpha == 1)) {
    FrobeniusSpec t = s;
    t.complement = ComplementSpec::cyclic(H.order());
    return classify_cyclic(t);
  }

  if (H.kind == ComplementSpec::Kind::QuatCyclic) {
    Verdict v;
    v.justification = Justification::ThmNonNilpCompl;
    v.poc = false;
    const bool own = classify_complement(H).poc;
    v.details = "non-cyclic nilpotent complement " + H.text() +
                (own ? " has perfect order classes on its own, but fits no such Frobenius group"
                     : " (and it does not have perfect order classes itself)");
    return v;
  }

  if (H.kind == ComplementSpec::Kind::SL2_5) {
    Verdict v;
    v.justification = Justification::ThmB;
    v.poc = s.kernel.p == 11 && s.kernel.r == 2;
    v.details = v.poc ? "perfect Frobenius group over a homocyclic 11-group of rank 2"
                      : "SL(2,5) requires a homocyclic 11-group kernel of rank 2, got " +
                            s.kernel.text();
    return v;
  }

  if (H.kind == ComplementSpec::Kind::SL2_3) {
    Verdict v;
    v.justification = Justification::ThmD;
    v.poc = thm_d_member(s);
    v.details = v.poc ? "family C_{5^k}^2 x| SL(2,3)"
                      : "SL(2,3) requires a homocyclic 5-group kernel of rank 2, got " +
                            s.kernel.text();
    return v;
  }

  // metacyclic, alpha > 1: soluble and non-nilpotent
  const auto primes = H.prime_divisors();
  const bool has2 = std::find(primes.begin(), primes.end(), u64(2)) != primes.end();
  if (primes.size() == 2 && has2) {
    const u64 q = primes[0] == 2 ? primes[1] : primes[0];
    Verdict v;
    v.justification = Justification::ThmD;
    v.poc = thm_d_member(s);
    if (v.poc) {
      v.details = "biprimary family member " + s.kernel.text() + " x| " + H.text();
    } else if (q != 3 && q != 5) {
      v.details = "non-nilpotent {2," + std::to_string(q) +
                  "}-complement: the odd prime must be 3 or 5";
    } else {
      v.details = H.text() + " with kernel " + s.kernel.text() +
                  " is outside the five biprimary families";
    }
    return v;
  }
  if (primes == std::vector<u64>{2, 3, 5}) {
    Verdict v;
    v.justification = Justification::ThmE;
    v.poc = false;
    v.details = "soluble {2,3,5}-complement of order divisible by 30";
    return v;
  }

  Verdict a = theorem_a_check(s);
  if (!a.poc) {
    a.details += "; complement shape outside the classified families";
    return a;
  }
  Verdict v;
  v.justification = Justification::Unclassified;
  v.poc = a.poc;
  v.details = "complement shape outside the classified families; " + a.details +
              "; existence of a fixed-point-free action not verified";
  return v;
}

std::vector<std::pair<u64, u32>> pierpont_family_params(u64 max_order) {
  struct Row {
    u64 order;
    u64 p;
    u32 k;
  };
  std::vector<Row> rows;
  for (u64 p = 3; p - 1 <= max_order / p; p += 2) {
    if (!is_pierpont_prime(p)) continue;
    u64 pk = p;
    for (u32 k = 1; pk <= max_order / (p - 1); ++k) {
      rows.push_back({pk * (p - 1), p, k});
      if (pk > max_order / p) break;
      pk *= p;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.order, a.p, a.k) < std::tie(b.order, b.p, b.k);
  });
  std::vector<std::pair<u64, u32>> out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.emplace_back(r.p, r.k);
  return out;
}

}  // namespace pocfrob
