#include "pocfrob/diophantine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace pocfrob {

namespace {

u64 strip(u64 n, u64 p) {
  while (n % p == 0) n /= p;
  return n;
}

// All values 2^x q^y <= bound, value -> (x, y). Values are unique since the
// bases are distinct primes.
std::map<u64, std::pair<u64, u64>> monomials(u64 q, u64 bound) {
  std::map<u64, std::pair<u64, u64>> out;
  u64 pw2 = 1, x = 0;
  for (;;) {
    u64 v = pw2, y = 0;
    for (;;) {
      out[v] = {x, y};
      if (v > bound / q) break;
      v *= q;
      ++y;
    }
    if (pw2 > bound / 2) break;
    pw2 *= 2;
    ++x;
  }
  return out;
}

// Pairs (A, B) with A - B = 1 drawn from two monomial maps; emits
// (xa, ya, xb, yb).
std::vector<std::vector<u64>> consecutive_pairs(const std::map<u64, std::pair<u64, u64>>& big,
                                                const std::map<u64, std::pair<u64, u64>>& small) {
  std::vector<std::vector<u64>> out;
  for (const auto& [bval, bexp] : small) {
    auto it = big.find(bval + 1);
    if (it == big.end()) continue;
    out.push_back({it->second.first, it->second.second, bexp.first, bexp.second});
  }
  return out;
}

std::vector<std::vector<u64>> solve_cons_pp(u64 bound) {
  // proper prime powers p^a <= bound, a >= 2
  std::map<u64, std::pair<u64, u64>> pp;  // value -> (p, a)
  for (u64 p = 2; p * p <= bound; ++p) {
    if (!is_prime(p)) continue;
    u64 v = p * p;
    u64 a = 2;
    for (;;) {
      pp[v] = {p, a};
      if (v > bound / p) break;
      v *= p;
      ++a;
    }
  }
  std::vector<std::vector<u64>> out;
  for (const auto& [v, pa] : pp) {
    auto it = pp.find(v + 1);
    if (it == pp.end()) continue;
    out.push_back({it->second.first, pa.first, it->second.second, pa.second});
  }
  return out;
}

std::vector<std::vector<u64>> solve_two_powers(u64 big_base, u64 small_base, u64 bound,
                                               bool tuple_is_2exp_first) {
  // big_base^i - small_base^j = 1 with both powers <= bound
  std::vector<std::vector<u64>> out;
  u64 bp = 1, i = 0;
  for (;;) {
    u64 sp = 1, j = 0;
    for (;;) {
      if (bp == sp + 1) {
        // DIFF_2_3 tuples are (a,b) with 2^a - 3^b = 1; DIFF_3_2 tuples are
        // (a,b) with 3^b - 2^a = 1, so the 2-exponent always comes first.
        if (tuple_is_2exp_first)
          out.push_back({i, j});
        else
          out.push_back({j, i});
      }
      if (sp > bound / small_base) break;
      sp *= small_base;
      ++j;
    }
    if (bp > bound / big_base) break;
    bp *= big_base;
    ++i;
  }
  return out;
}

std::vector<std::vector<u64>> solve_sandwich(u64 bound, const std::vector<u64>& pi,
                                             bool square, bool require_all) {
  // square = false: p with p-1, p+1 both pi-numbers.
  // square = true:  n with n^2 - 1 a pi-number divisible by every member of pi.
  std::vector<std::vector<u64>> out;
  for (u64 n = 2; n <= bound; ++n) {
    if (square) {
      u64 w = n * n - 1;
      bool ok = true;
      if (require_all) {
        for (u64 p : pi) ok = ok && (w % p == 0);
      }
      if (!ok) continue;
      for (u64 p : pi) w = strip(w, p);
      if (w == 1) out.push_back({n});
    } else {
      u64 lo = n - 1, hi = n + 1;
      for (u64 p : pi) {
        lo = strip(lo, p);
        hi = strip(hi, p);
      }
      if (lo == 1 && hi == 1) out.push_back({n});
    }
  }
  return out;
}

std::vector<std::vector<u64>> solve_dio240(u64 bound) {
  std::vector<std::vector<u64>> out;
  for (u64 d : divisors(240)) {
    const u64 q = d + 1;
    if (q <= 5 || !is_prime(q) || 240 % q == 0 || q > bound) continue;
    u64 qm = q;
    for (u64 m = 1; qm <= (bound - 1) / 240; ++m) {
      const u64 value = 240 * qm + 1;  // candidate p^r <= bound
      if (auto pr = prime_power_decompose(value); pr && pr->second > 1 && pr->first > 5) {
        out.push_back({pr->first, pr->second, q, m});
      }
      if (qm > bound / q) break;
      qm *= q;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<u64>> solve_family(const DiophantineFamily& family, u64 bound) {
  if (bound < 2) throw std::domain_error("solve_family: bound must be >= 2");
  const bool needs_q =
      family.tag == DiophantineTag::Diff2Q || family.tag == DiophantineTag::Sandwich2Q;
  if (needs_q) {
    if (!family.q || *family.q < 3 || *family.q % 2 == 0 || !is_prime(*family.q))
      throw std::domain_error("solve_family: family requires an odd prime parameter q");
  } else if (family.q) {
    throw std::domain_error("solve_family: family takes no parameter");
  }

  std::vector<std::vector<u64>> out;
  switch (family.tag) {
    case DiophantineTag::ConsPP:
      out = solve_cons_pp(bound);
      break;
    case DiophantineTag::Diff2_3:
      out = solve_two_powers(2, 3, bound, true);
      break;
    case DiophantineTag::Diff3_2:
      out = solve_two_powers(3, 2, bound, false);
      break;
    case DiophantineTag::Diff23_23: {
      const auto m = monomials(3, bound);
      out = consecutive_pairs(m, m);
      break;
    }
    case DiophantineTag::Diff2Q: {
      const auto m = monomials(*family.q, bound);
      out = consecutive_pairs(m, m);
      break;
    }
    case DiophantineTag::Diff23_25:
      out = consecutive_pairs(monomials(3, bound), monomials(5, bound));
      break;
    case DiophantineTag::Diff25_23: {
      // 2^u 5^v - 2^x 3^y = 1, reported as (x,y,u,v)
      for (auto& t : consecutive_pairs(monomials(5, bound), monomials(3, bound)))
        out.push_back({t[2], t[3], t[0], t[1]});
      break;
    }
    case DiophantineTag::Sandwich23:
      out = solve_sandwich(bound, {2, 3}, false, false);
      break;
    case DiophantineTag::Sandwich2Q:
      out = solve_sandwich(bound, {2, *family.q}, true, true);
      break;
    case DiophantineTag::Square235:
      out = solve_sandwich(bound, {2, 3, 5}, true, true);
      break;
    case DiophantineTag::Dio240:
      out = solve_dio240(bound);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* diophantine_tag_name(DiophantineTag tag) {
  switch (tag) {
    case DiophantineTag::ConsPP: return "CONS_PP";
    case DiophantineTag::Diff2_3: return "DIFF_2_3";
    case DiophantineTag::Diff3_2: return "DIFF_3_2";
    case DiophantineTag::Diff23_23: return "DIFF_23_23";
    case DiophantineTag::Diff2Q: return "DIFF_2Q";
    case DiophantineTag::Diff23_25: return "DIFF_23_25";
    case DiophantineTag::Diff25_23: return "DIFF_25_23";
    case DiophantineTag::Sandwich23: return "SANDWICH_23";
    case DiophantineTag::Sandwich2Q: return "SANDWICH_2Q";
    case DiophantineTag::Square235: return "SQUARE_235";
    case DiophantineTag::Dio240: return "DIO240";
  }
  return "?";
}

std::optional<DiophantineTag> diophantine_tag_from_name(const std::string& name) {
  static const std::pair<const char*, DiophantineTag> table[] = {
      {"CONS_PP", DiophantineTag::ConsPP},       {"DIFF_2_3", DiophantineTag::Diff2_3},
      {"DIFF_3_2", DiophantineTag::Diff3_2},     {"DIFF_23_23", DiophantineTag::Diff23_23},
      {"DIFF_2Q", DiophantineTag::Diff2Q},       {"DIFF_23_25", DiophantineTag::Diff23_25},
      {"DIFF_25_23", DiophantineTag::Diff25_23}, {"SANDWICH_23", DiophantineTag::Sandwich23},
      {"SANDWICH_2Q", DiophantineTag::Sandwich2Q}, {"SQUARE_235", DiophantineTag::Square235},
      {"DIO240", DiophantineTag::Dio240},
  };
  for (const auto& [n, t] : table) {
    if (name == n) return t;
  }
  return std::nullopt;
}

}  // namespace pocfrob
