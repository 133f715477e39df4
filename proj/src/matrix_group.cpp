#include "pocfrob/matrix_group.hpp"

#include <stdexcept>
#include <unordered_set>

namespace pocfrob {

namespace {

const Mat* find_gen(const MatrixAction& a, const std::string& label) {
  for (const auto& [l, m] : a.generators) {
    if (l == label) return &m;
  }
  return nullptr;
}

// Element order given that it divides group_order.
u64 order_dividing(const Mat& m, u64 group_order, const FactoredInteger& f) {
  u64 t = group_order;
  for (const auto& [p, e] : f.factors) {
    for (u32 i = 0; i < e; ++i) {
      if (t % p != 0) break;
      if (!mat_pow(m, t / p).is_identity()) break;
      t /= p;
    }
  }
  return t;
}

}  // namespace

std::optional<std::vector<Mat>> matrix_closure(const std::vector<Mat>& gens, u64 cap) {
  if (gens.empty()) throw std::domain_error("matrix_closure: no generators");
  const Mat id = Mat::identity(gens.front().dim, gens.front().mod);
  std::vector<Mat> els{id};
  std::unordered_set<std::string> seen{mat_key(id)};
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (const Mat& g : gens) {
      Mat m = mat_mul(els[i], g);
      if (seen.insert(mat_key(m)).second) {
        els.push_back(std::move(m));
        if (els.size() > cap) return std::nullopt;
      }
    }
  }
  return els;
}

std::vector<Mat> action_elements(const MatrixAction& action) {
  std::vector<Mat> gens;
  gens.reserve(action.generators.size());
  for (const auto& [l, m] : action.generators) {
    (void)l;
    gens.push_back(m);
  }
  auto closure = matrix_closure(gens, action.spec.order());
  if (!closure || closure->size() != action.spec.order())
    throw std::runtime_error("action closure does not match the complement order");
  return *closure;
}

void verify_action(const MatrixAction& action) {
  validate(action.spec);
  if (action.generators.empty()) throw std::runtime_error("action has no generators");
  for (const auto& [l, m] : action.generators) {
    (void)l;
    if (m.dim != action.dim || m.mod != action.modulus)
      throw std::runtime_error("action generator shape mismatch");
    if (!invertible_mod_p(m, action.prime))
      throw std::runtime_error("action generator is not invertible");
  }

  const auto need = [&](const std::string& label) -> const Mat& {
    const Mat* m = find_gen(action, label);
    if (m == nullptr) throw std::runtime_error("action is missing generator " + label);
    return *m;
  };

  switch (action.spec.kind) {
    case ComplementSpec::Kind::Cyclic: {
      if (!mat_has_order(need("g"), action.spec.n))
        throw std::runtime_error("cyclic generator has wrong order");
      break;
    }
    case ComplementSpec::Kind::Metacyclic: {
      const Mat &x = need("x"), &y = need("y");
      if (!mat_has_order(x, action.spec.alpha)) throw std::runtime_error("x has wrong order");
      if (!mat_has_order(y, action.spec.beta)) throw std::runtime_error("y has wrong order");
      if (action.spec.alpha > 1 &&
          mat_mul(x, y) != mat_mul(y, mat_pow(x, action.spec.gamma)))
        throw std::runtime_error("metacyclic twist relation fails");
      break;
    }
    case ComplementSpec::Kind::QuatCyclic: {
      const Mat &x = need("x"), &y = need("y");
      const u64 half = u64(1) << (action.spec.n - 1);
      if (!mat_has_order(x, half)) throw std::runtime_error("x has wrong order");
      if (mat_mul(y, y) != mat_pow(x, half / 2))
        throw std::runtime_error("quaternion square relation fails");
      if (mat_mul(x, y) != mat_mul(y, mat_pow(x, half - 1)))
        throw std::runtime_error("quaternion inversion relation fails");
      if (action.spec.m > 1) {
        const Mat& c = need("c");
        if (!mat_has_order(c, action.spec.m)) throw std::runtime_error("c has wrong order");
        if (mat_mul(c, x) != mat_mul(x, c) || mat_mul(c, y) != mat_mul(y, c))
          throw std::runtime_error("central factor fails to commute");
      }
      break;
    }
    case ComplementSpec::Kind::SL2_3:
    case ComplementSpec::Kind::SL2_5: {
      const Mat &s = need("s"), &t = need("t");
      const u64 tpow = action.spec.kind == ComplementSpec::Kind::SL2_3 ? 3 : 5;
      const Mat z = mat_pow(s, 3);
      if (mat_pow(t, tpow) != z || mat_pow(mat_mul(s, t), 2) != z)
        throw std::runtime_error("binary polyhedral relations fail");
      if (z.is_identity()) throw std::runtime_error("central element collapsed");
      break;
    }
  }
  action_elements(action);  // faithfulness: closure order matches
}

bool is_fixed_point_free(const MatrixAction& action) {
  for (const auto& [l, m] : action.generators) {
    (void)l;
    if (!invertible_mod_p(m, action.prime))
      throw std::domain_error("is_fixed_point_free: generator not invertible");
  }
  std::vector<Mat> gens;
  for (const auto& [l, m] : action.generators) {
    (void)l;
    gens.push_back(m);
  }
  auto closure = matrix_closure(gens, kDefaultCensusLimit);
  if (!closure) throw std::domain_error("is_fixed_point_free: closure limit exceeded");
  for (const Mat& m : *closure) {
    if (m.is_identity()) continue;
    Mat d = m;
    for (u32 i = 0; i < d.dim; ++i) d.at(i, i) = (d.at(i, i) + d.mod - 1) % d.mod;
    if (det_mod_p(d, action.prime) == 0) return false;
  }
  return true;
}

ConcreteGroup group_from_matrices(u64 modulus, std::vector<Mat> elements) {
  ConcreteGroup g;
  g.modulus = modulus;
  g.dim = elements.empty() ? 0 : elements.front().dim;
  g.elements = std::move(elements);
  return g;
}

ConcreteGroup semidirect_product(const HomocyclicKernel& kernel, const MatrixAction& action,
                                 u64 limit) {
  validate(kernel);
  if (action.modulus != kernel.exponent() || action.dim != kernel.r)
    throw std::domain_error("semidirect_product: action does not match the kernel");
  if (!is_fixed_point_free(action))
    throw std::domain_error("semidirect_product: action is not fixed-point-free");

  const std::vector<Mat> h = action_elements(action);
  const u64 korder = kernel.order();
  if (korder > limit / h.size())
    throw std::domain_error("semidirect_product: group order exceeds limit");

  const u64 q = action.modulus;
  const u32 r = kernel.r;
  auto affine = [&](const Mat& lin, const std::vector<u64>& v) {
    Mat m(r + 1, q);
    for (u32 i = 0; i < r; ++i) {
      for (u32 j = 0; j < r; ++j) m.at(i, j) = lin.at(i, j);
      m.at(i, r) = v[i];
    }
    m.at(r, r) = 1;
    return m;
  };

  ConcreteGroup g;
  g.modulus = q;
  g.dim = r + 1;
  g.elements.reserve(korder * h.size());
  const std::vector<u64> zero(r, 0);
  for (const Mat& lin : h) g.complement.push_back(affine(lin, zero));

  std::vector<u64> v(r, 0);
  for (const Mat& lin : h) {
    std::fill(v.begin(), v.end(), 0);
    for (;;) {
      g.elements.push_back(affine(lin, v));
      u32 i = 0;
      while (i < r && ++v[i] == q) v[i++] = 0;
      if (i == r) break;
    }
  }
  g.decomposition = {korder, h.size()};
  return g;
}

OrderCensus order_census_bruteforce(const ConcreteGroup& g, u64 limit) {
  if (g.order() == 0) throw std::domain_error("order census: empty group");
  if (g.order() > limit) throw std::domain_error("order census: group order exceeds limit");
  const FactoredInteger f = factorize(g.order());
  OrderCensus c;
  c.group_order = g.order();
  for (const Mat& m : g.elements) ++c.entries[order_dividing(m, g.order(), f)];
  return c;
}

bool is_malnormal(const ConcreteGroup& g, const std::vector<Mat>& complement, u64 limit) {
  if (g.order() > limit) throw std::domain_error("is_malnormal: group order exceeds limit");
  if (complement.empty()) throw std::domain_error("is_malnormal: empty complement");
  std::unordered_set<std::string> hset;
  for (const Mat& h : complement) hset.insert(mat_key(h));
  const Mat id = Mat::identity(g.dim, g.modulus);
  for (const Mat& t : g.elements) {
    if (hset.count(mat_key(t))) continue;
    const Mat tinv = mat_pow(t, g.order() - 1);  // t^{|G|} = 1
    for (const Mat& h : complement) {
      if (h.is_identity()) continue;
      const Mat conj = mat_mul(mat_mul(tinv, h), t);
      if (conj != id && hset.count(mat_key(conj))) return false;
    }
  }
  return true;
}

}  // namespace pocfrob
