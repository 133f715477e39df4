#include "pocfrob/matrix.hpp"

#include <stdexcept>

namespace pocfrob {

Mat Mat::identity(u32 d, u64 m) {
  Mat r(d, m);
  for (u32 i = 0; i < d; ++i) r.at(i, i) = 1 % m;
  return r;
}

bool Mat::is_identity() const { return *this == identity(dim, mod); }

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.dim != y.dim || x.mod != y.mod) throw std::domain_error("mat_mul: shape mismatch");
  const u32 d = x.dim;
  Mat r(d, x.mod);
  if (x.mod > (u64(1) << 31)) {
    for (u32 i = 0; i < d; ++i)
      for (u32 k = 0; k < d; ++k) {
        const u64 v = x.at(i, k);
        if (v == 0) continue;
        for (u32 j = 0; j < d; ++j)
          r.at(i, j) = (r.at(i, j) + mul_mod(v, y.at(k, j), x.mod)) % x.mod;
      }
    return r;
  }
  for (u32 i = 0; i < d; ++i) {
    for (u32 k = 0; k < d; ++k) {
      const u64 v = x.at(i, k);
      if (v == 0) continue;
      for (u32 j = 0; j < d; ++j) {
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.mod;
      }
    }
  }
  return r;
}

Mat mat_pow(const Mat& x, u64 e) {
  Mat r = Mat::identity(x.dim, x.mod);
  Mat b = x;
  while (e != 0) {
    if (e & 1) r = mat_mul(r, b);
    e >>= 1;
    if (e) b = mat_mul(b, b);
  }
  return r;
}

Mat mat_neg_identity(u32 dim, u64 mod) {
  Mat r(dim, mod);
  for (u32 i = 0; i < dim; ++i) r.at(i, i) = (mod - 1) % mod;
  return r;
}

Mat mat_reduce(const Mat& m, u64 new_mod) {
  Mat r(m.dim, new_mod);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i] % new_mod;
  return r;
}

Mat mat_lift(const Mat& m, u64 new_mod) {
  if (new_mod < m.mod) throw std::domain_error("mat_lift: modulus must grow");
  Mat r(m.dim, new_mod);
  r.a = m.a;
  return r;
}

u64 mat_order(const Mat& m, u64 cap) {
  const Mat id = Mat::identity(m.dim, m.mod);
  Mat t = m;
  for (u64 k = 1; k <= cap; ++k) {
    if (t == id) return k;
    t = mat_mul(t, m);
  }
  return 0;
}

bool mat_has_order(const Mat& m, u64 d) {
  if (d == 0) return false;
  if (!mat_pow(m, d).is_identity()) return false;
  for (const auto& [p, e] : factorize(d).factors) {
    (void)e;
    if (mat_pow(m, d / p).is_identity()) return false;
  }
  return true;
}

u64 det_mod_p(const Mat& m, u64 p) {
  const u32 d = m.dim;
  std::vector<u64> w(m.a);
  for (auto& v : w) v %= p;
  auto at = [&](u32 i, u32 j) -> u64& { return w[std::size_t(i) * d + j]; };
  u64 det = 1;
  for (u32 col = 0, row = 0; col < d && row < d; ++col, ++row) {
    u32 piv = row;
    while (piv < d && at(piv, col) == 0) ++piv;
    if (piv == d) return 0;
    if (piv != row) {
      for (u32 j = 0; j < d; ++j) std::swap(at(piv, j), at(row, j));
      det = (p - det) % p;
    }
    det = mul_mod(det, at(row, col), p);
    const u64 inv = mod_inverse(at(row, col), p);
    for (u32 i = row + 1; i < d; ++i) {
      const u64 f = mul_mod(at(i, col), inv, p);
      if (f == 0) continue;
      for (u32 j = col; j < d; ++j) {
        at(i, j) = (at(i, j) + p - mul_mod(f, at(row, j), p)) % p;
      }
    }
  }
  return det;
}

bool invertible_mod_p(const Mat& m, u64 p) { return det_mod_p(m, p) != 0; }

u64 mat_trace(const Mat& m) {
  u64 t = 0;
  for (u32 i = 0; i < m.dim; ++i) t = (t + m.at(i, i)) % m.mod;
  return t;
}

std::vector<Mat> solve_intertwine_multi(const std::vector<std::pair<Mat, Mat>>& eqs, u64 p) {
  if (eqs.empty()) throw std::domain_error("solve_intertwine_multi: no equations");
  const u32 d = eqs.front().first.dim;
  const u32 nvars = d * d;
  const u32 nrows = nvars * static_cast<u32>(eqs.size());
  // Row (eq, i, j): sum_l X_{il} P_{lj} - sum_k Q_{ik} X_{kj} = 0.
  std::vector<u64> sys(std::size_t(nrows) * nvars, 0);
  auto coeff = [&](u32 r, u32 c) -> u64& { return sys[std::size_t(r) * nvars + c]; };
  u32 base = 0;
  for (const auto& [Praw, Qraw] : eqs) {
    const Mat P = mat_reduce(Praw, p), Q = mat_reduce(Qraw, p);
    for (u32 i = 0; i < d; ++i) {
      for (u32 j = 0; j < d; ++j) {
        const u32 r = base + i * d + j;
        for (u32 l = 0; l < d; ++l) coeff(r, i * d + l) = (coeff(r, i * d + l) + P.at(l, j)) % p;
        for (u32 k = 0; k < d; ++k)
          coeff(r, k * d + j) = (coeff(r, k * d + j) + p - Q.at(i, k)) % p;
      }
    }
    base += nvars;
  }

  // Reduced row echelon form over F_p.
  std::vector<u32> pivot_col;
  u32 row = 0;
  for (u32 col = 0; col < nvars && row < nrows; ++col) {
    u32 piv = row;
    while (piv < nrows && coeff(piv, col) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != row)
      for (u32 j = 0; j < nvars; ++j) std::swap(coeff(piv, j), coeff(row, j));
    const u64 inv = mod_inverse(coeff(row, col), p);
    for (u32 j = 0; j < nvars; ++j) coeff(row, j) = mul_mod(coeff(row, j), inv, p);
    for (u32 i = 0; i < nrows; ++i) {
      if (i == row || coeff(i, col) == 0) continue;
      const u64 f = coeff(i, col);
      for (u32 j = 0; j < nvars; ++j)
        coeff(i, j) = (coeff(i, j) + p - mul_mod(f, coeff(row, j), p)) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(nvars, false);
  for (u32 c : pivot_col) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (u32 free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    Mat b(d, p);
    b.a[free] = 1;
    for (u32 r2 = 0; r2 < pivot_col.size(); ++r2) {
      const u64 v = coeff(r2, free);
      if (v != 0) b.a[pivot_col[r2]] = p - v;
    }
    basis.push_back(b);
  }
  return basis;
}

std::vector<Mat> solve_intertwine(const Mat& P, const Mat& Q, u64 p) {
  return solve_intertwine_multi({{P, Q}}, p);
}

std::vector<Mat> conjugator_space(const Mat& A, u64 gamma) {
  if (!is_prime(A.mod)) throw std::domain_error("conjugator_space: modulus must be prime");
  return solve_intertwine(A, mat_pow(A, gamma), A.mod);
}

std::string mat_text(const Mat& m) {
  std::string s = "[";
  for (u32 i = 0; i < m.dim; ++i) {
    s += (i ? ",[" : "[");
    for (u32 j = 0; j < m.dim; ++j) {
      if (j) s += ",";
      s += std::to_string(m.at(i, j));
    }
    s += "]";
  }
  s += "]";
  return s;
}

std::string mat_key(const Mat& m) {
  std::string s;
  s.reserve(m.a.size() * 8);
  for (u64 v : m.a) {
    for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  return s;
}

}  // namespace pocfrob
