#include "pocfrob/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace pocfrob {

namespace {

constexpr u64 kEnumerationCap = 100000000;  // candidates in one linear-space scan

// Companion matrix of t^d - v[d-1] t^{d-1} - ... - v[0].
Mat companion(const std::vector<u64>& v, u64 p) {
  const u32 d = static_cast<u32>(v.size());
  Mat m(d, p);
  for (u32 i = 0; i + 1 < d; ++i) m.at(i + 1, i) = 1;
  for (u32 i = 0; i < d; ++i) m.at(i, d - 1) = v[i] % p;
  return m;
}

bool next_tuple(std::vector<u64>& v, u64 p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

// Descending partitions of r, largest first part first: [4],[3,1],[2,2],...
void partitions_desc(u32 rest, u32 maxpart, std::vector<u32>& cur,
                     std::vector<std::vector<u32>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (u32 part = std::min(rest, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(rest - part, part, cur, out);
    cur.pop_back();
  }
}

Mat block_diag(const std::vector<Mat>& blocks, u64 p) {
  u32 d = 0;
  for (const Mat& b : blocks) d += b.dim;
  Mat m(d, p);
  u32 off = 0;
  for (const Mat& b : blocks) {
    for (u32 i = 0; i < b.dim; ++i)
      for (u32 j = 0; j < b.dim; ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.dim;
  }
  return m;
}

// All conjugacy-class candidates of order exactly d in GL(r,p): block-diagonal
// joins of companion matrices over every partition of r. Elements of order
// prime to p are semisimple, and every semisimple class contains such a join.
std::vector<Mat> order_class_candidates(u64 d, u32 r, u64 p) {
  std::vector<std::vector<u32>> parts;
  std::vector<u32> cur;
  partitions_desc(r, r, cur, parts);

  std::vector<Mat> out;
  if (d == 1) {
    out.push_back(Mat::identity(r, p));
    return out;
  }
  for (const auto& part : parts) {
    // one coefficient tuple per block; equal-size blocks kept non-decreasing
    std::vector<std::vector<u64>> tuples;
    for (u32 sz : part) tuples.push_back(std::vector<u64>(sz, 0));
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < tuples.size() && ok; ++i) {
        if (tuples[i][0] == 0) ok = false;  // invertibility of the block
        if (ok && i + 1 < tuples.size() && part[i] == part[i + 1] &&
            std::lexicographical_compare(tuples[i + 1].begin(), tuples[i + 1].end(),
                                         tuples[i].begin(), tuples[i].end()))
          ok = false;  // dedupe equal-size block multisets
      }
      if (ok) {
        std::vector<Mat> blocks;
        for (const auto& t : tuples) blocks.push_back(companion(t, p));
        Mat m = block_diag(blocks, p);
        if (mat_has_order(m, d)) out.push_back(m);
      }
      // advance the multi-tuple counter; wrapped tuples are left at zero
      std::size_t i = 0;
      while (i < tuples.size() && !next_tuple(tuples[i], p)) ++i;
      if (i == tuples.size()) break;
    }
  }
  return out;
}

// Members of a linear space of matrices over F_p, canonical coefficient order,
// zero excluded. Calls fn until it returns true; reports whether it did.
template <typename Fn>
bool scan_space(const std::vector<Mat>& basis, u64 p, Fn&& fn) {
  if (basis.empty()) return false;
  u128 total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= p;
    if (total > kEnumerationCap)
      throw std::runtime_error("realize: intertwine space too large to enumerate");
  }
  const u32 d = basis.front().dim;
  std::vector<u64> c(basis.size(), 0);
  Mat m(d, p);
  while (next_tuple(c, p)) {
    std::fill(m.a.begin(), m.a.end(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t k = 0; k < m.a.size(); ++k)
        m.a[k] = (m.a[k] + c[i] * basis[i].a[k]) % p;
    }
    if (fn(m)) return true;
  }
  return false;
}

MatrixAction make_action(u64 p, u32 dim, const ComplementSpec& spec,
                         std::vector<std::pair<std::string, Mat>> gens) {
  MatrixAction a;
  a.modulus = p;
  a.prime = p;
  a.k = 1;
  a.dim = dim;
  a.spec = spec;
  a.generators = std::move(gens);
  return a;
}

std::optional<MatrixAction> realize_cyclic(const ComplementSpec& spec, u32 r, u64 p) {
  for (const Mat& g : order_class_candidates(spec.n, r, p)) {
    MatrixAction a = make_action(p, r, spec, {{"g", g}});
    verify_action(a);
    return a;
  }
  return std::nullopt;
}

std::optional<MatrixAction> realize_metacyclic(const ComplementSpec& spec, u32 r, u64 p) {
  const u64 alpha = spec.alpha, beta = spec.beta, gamma = spec.gamma;
  if (alpha == 1) {
    ComplementSpec cyc = ComplementSpec::cyclic(beta);
    auto base = realize_cyclic(cyc, r, p);
    if (!base) return std::nullopt;
    MatrixAction a = make_action(
        p, r, spec, {{"x", Mat::identity(r, p)}, {"y", base->generators.front().second}});
    verify_action(a);
    return a;
  }
  for (const Mat& x : order_class_candidates(alpha, r, p)) {
    const Mat xg = mat_pow(x, gamma);
    // y with x*y = y*x^gamma, i.e. y^{-1} x y = x^gamma
    const auto basis = solve_intertwine(xg, x, p);
    std::optional<MatrixAction> found;
    scan_space(basis, p, [&](const Mat& y) {
      if (!invertible_mod_p(y, p)) return false;
      if (!mat_has_order(y, beta)) return false;
      if (mat_mul(x, y) != mat_mul(y, xg)) return false;
      auto closure = matrix_closure({x, y}, alpha * beta);
      if (!closure || closure->size() != alpha * beta) return false;
      found = make_action(p, r, spec, {{"x", x}, {"y", y}});
      return true;
    });
    if (found) {
      verify_action(*found);
      return found;
    }
  }
  return std::nullopt;
}

std::optional<MatrixAction> realize_quat_cyclic(const ComplementSpec& spec, u32 r, u64 p) {
  const u64 half = u64(1) << (spec.n - 1);
  const u64 qorder = u64(1) << spec.n;
  for (const Mat& x : order_class_candidates(half, r, p)) {
    const Mat xinv = mat_pow(x, half - 1);
    const Mat xq = mat_pow(x, half / 2);
    const auto basis = solve_intertwine(xinv, x, p);
    std::optional<MatrixAction> found;
    scan_space(basis, p, [&](const Mat& y) {
      if (!invertible_mod_p(y, p)) return false;
      if (mat_mul(y, y) != xq) return false;
      auto quat = matrix_closure({x, y}, qorder);
      if (!quat || quat->size() != qorder) return false;
      if (spec.m == 1) {
        found = make_action(p, r, spec, {{"x", x}, {"y", y}});
        return true;
      }
      // central cyclic factor: invertible member of order m in the joint
      // centralizer of x and y, with the right total group order
      const auto cbasis = solve_intertwine_multi({{x, x}, {y, y}}, p);
      return scan_space(cbasis, p, [&](const Mat& c) {
        if (!invertible_mod_p(c, p)) return false;
        if (!mat_has_order(c, spec.m)) return false;
        auto full = matrix_closure({x, y, c}, qorder * spec.m);
        if (!full || full->size() != qorder * spec.m) return false;
        found = make_action(p, r, spec, {{"x", x}, {"y", y}, {"c", c}});
        return true;
      });
    });
    if (found) {
      verify_action(*found);
      return found;
    }
  }
  return std::nullopt;
}

std::optional<MatrixAction> realize_sl2(const ComplementSpec& spec, u32 r, u64 p) {
  // Binary tetrahedral/icosahedral presentation <s,t | s^3 = t^q = (st)^2>,
  // q = 3 or 5. These occur only in dimension 2, inside SL(2,p); a twisted
  // copy exists exactly when an untwisted one does.
  if (r != 2) return std::nullopt;
  const bool tetra = spec.kind == ComplementSpec::Kind::SL2_3;
  const u64 t_order = tetra ? 6 : 10;
  const u64 t_pow = tetra ? 3 : 5;
  const u64 target = spec.order();
  const Mat neg = mat_neg_identity(2, p);

  // class representatives for t: companions of t^2 - tau*t + 1
  for (u64 tau = 0; tau < p; ++tau) {
    const Mat t = companion({p - 1, tau}, p);
    if (!mat_has_order(t, t_order) || mat_pow(t, t_pow) != neg) continue;
    // s has characteristic polynomial t^2 - t + 1, hence s^3 = -I; scan all
    // trace-1 determinant-1 matrices
    for (u64 a = 0; a < p; ++a) {
      const u64 d = (1 + p - a % p) % p;
      const u64 need_bc = (mul_mod(a, d, p) + p - 1) % p;  // bc = ad - 1
      for (u64 b = 0; b < p; ++b) {
        std::vector<u64> cs;
        if (b == 0) {
          if (need_bc != 0) continue;
          cs.resize(p);
          for (u64 i = 0; i < p; ++i) cs[i] = i;
        } else {
          cs.push_back(mul_mod(need_bc, mod_inverse(b, p), p));
        }
        for (u64 c : cs) {
          Mat s(2, p);
          s.at(0, 0) = a;
          s.at(0, 1) = b;
          s.at(1, 0) = c;
          s.at(1, 1) = d;
          if (mat_trace(mat_mul(s, t)) != 0) continue;  // (st)^2 = -I
          if (mat_pow(s, 3) != neg) continue;
          auto closure = matrix_closure({s, t}, target);
          if (!closure || closure->size() != target) continue;
          MatrixAction act = make_action(p, 2, spec, {{"s", s}, {"t", t}});
          verify_action(act);
          return act;
        }
      }
    }
  }
  return std::nullopt;
}

// Orders of the generators of a verified mod-p action, used as lift targets.
std::vector<u64> generator_orders(const MatrixAction& a) {
  std::vector<u64> out;
  for (const auto& [l, m] : a.generators) {
    (void)l;
    out.push_back(mat_order(m, a.spec.order()));
  }
  return out;
}

// Relations checkable once the first `count` generators are present.
bool partial_relations_hold(const MatrixAction& a, std::size_t count) {
  const auto& g = a.generators;
  switch (a.spec.kind) {
    case ComplementSpec::Kind::Cyclic: return true;
    case ComplementSpec::Kind::Metacyclic:
      if (count >= 2 && a.spec.alpha > 1) {
        const Mat &x = g[0].second, &y = g[1].second;
        if (mat_mul(x, y) != mat_mul(y, mat_pow(x, a.spec.gamma))) return false;
      }
      return true;
    case ComplementSpec::Kind::QuatCyclic: {
      const u64 half = u64(1) << (a.spec.n - 1);
      if (count >= 2) {
        const Mat &x = g[0].second, &y = g[1].second;
        if (mat_mul(y, y) != mat_pow(x, half / 2)) return false;
        if (mat_mul(x, y) != mat_mul(y, mat_pow(x, half - 1))) return false;
      }
      if (count >= 3) {
        const Mat &x = g[0].second, &y = g[1].second, &c = g[2].second;
        if (mat_mul(c, x) != mat_mul(x, c) || mat_mul(c, y) != mat_mul(y, c)) return false;
      }
      return true;
    }
    case ComplementSpec::Kind::SL2_3:
    case ComplementSpec::Kind::SL2_5: {
      if (count >= 2) {
        const Mat &s = g[0].second, &t = g[1].second;
        const u64 tpow = a.spec.kind == ComplementSpec::Kind::SL2_3 ? 3 : 5;
        const Mat z = mat_pow(s, 3);
        if (mat_pow(t, tpow) != z || mat_pow(mat_mul(s, t), 2) != z) return false;
      }
      return true;
    }
  }
  return true;
}

}  // namespace

std::optional<Mat> element_of_order(u64 d, u32 r, u64 p) {
  if (!is_prime(p)) throw std::domain_error("element_of_order: p must be prime");
  if (d == 0 || r == 0) throw std::domain_error("element_of_order: d, r must be positive");
  if (d % p == 0) throw std::domain_error("element_of_order: order divisible by p");
  if (d == 1) return Mat::identity(r, p);
  std::vector<u64> v(r, 0);
  while (next_tuple(v, p)) {
    if (v[0] == 0) continue;
    const Mat c = companion(v, p);
    if (mat_has_order(c, d)) return c;
  }
  return std::nullopt;
}

std::optional<MatrixAction> realize_complement(const ComplementSpec& spec, u32 r, u64 p) {
  validate(spec);
  if (r == 0) throw std::domain_error("realize_complement: dimension must be positive");
  if (!is_prime(p)) throw std::domain_error("realize_complement: p must be prime");
  if (spec.order() % p == 0)
    throw std::domain_error("realize_complement: p divides the complement order");
  switch (spec.kind) {
    case ComplementSpec::Kind::Cyclic: return realize_cyclic(spec, r, p);
    case ComplementSpec::Kind::Metacyclic: return realize_metacyclic(spec, r, p);
    case ComplementSpec::Kind::QuatCyclic: return realize_quat_cyclic(spec, r, p);
    case ComplementSpec::Kind::SL2_3:
    case ComplementSpec::Kind::SL2_5: return realize_sl2(spec, r, p);
  }
  return std::nullopt;
}

MatrixAction lift_action(const MatrixAction& action, u32 k) {
  if (action.modulus != action.prime || action.k != 1)
    throw std::domain_error("lift_action: input must be a mod-p action");
  verify_action(action);
  if (k == 0) throw std::domain_error("lift_action: k must be positive");
  if (k == 1) return action;

  const u64 p = action.prime;
  const u64 mod = ipow(p, k);
  const u64 pk2 = ipow(p, 2 * k);
  const std::vector<u64> orders = generator_orders(action);

  MatrixAction lifted = action;
  lifted.modulus = mod;
  lifted.k = k;
  lifted.generators.clear();

  for (std::size_t gi = 0; gi < action.generators.size(); ++gi) {
    const auto& [label, m] = action.generators[gi];
    const u64 d = orders[gi];
    // e = 1 (mod d), e = 0 (mod p^{2k}) forces order exactly d
    u64 e = pk2;
    if (d > 1 && __builtin_mul_overflow(pk2, mod_inverse(pk2 % d, d), &e))
      throw std::runtime_error("lift_action: exponent overflow");
    Mat cand = mat_pow(mat_lift(m, mod), e);
    lifted.generators.emplace_back(label, cand);

    const auto stage_ok = [&]() {
      return mat_has_order(lifted.generators.back().second, d) &&
             partial_relations_hold(lifted, gi + 1);
    };
    if (stage_ok()) continue;

    // Search the full fiber over the mod-p generator: cand * (I + p*W).
    const u32 r = action.dim;
    const u64 kmod = ipow(p, k - 1);
    u128 fiber = 1;
    for (u32 i = 0; i < r * r; ++i) {
      fiber *= kmod;
      if (fiber > kEnumerationCap)
        throw std::runtime_error("lift_action: correction fiber too large");
    }
    bool found = false;
    std::vector<u64> w(std::size_t(r) * r, 0);
    while (next_tuple(w, kmod)) {
      Mat u = Mat::identity(r, mod);
      for (std::size_t i = 0; i < w.size(); ++i) u.a[i] = (u.a[i] + p * w[i]) % mod;
      lifted.generators.back().second = mat_mul(cand, u);
      if (stage_ok()) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("lift_action: no lift of generator " + label +
                               " satisfies the relations");
  }

  verify_action(lifted);
  for (std::size_t gi = 0; gi < action.generators.size(); ++gi) {
    if (mat_reduce(lifted.generators[gi].second, p) != action.generators[gi].second)
      throw std::runtime_error("lift_action: lift does not reduce to the input");
  }
  return lifted;
}

}  // namespace pocfrob
