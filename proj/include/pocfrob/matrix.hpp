#pragma once

#include <string>
#include <vector>

#include "pocfrob/numtheory.hpp"

namespace pocfrob {

/// Square matrix over Z/mod, row-major, entries reduced into [0, mod).
struct Mat {
  u32 dim = 0;
  u64 mod = 0;
  std::vector<u64> a;

  Mat() = default;
  Mat(u32 d, u64 m) : dim(d), mod(m), a(std::size_t(d) * d, 0) {}

  u64& at(u32 i, u32 j) { return a[std::size_t(i) * dim + j]; }
  u64 at(u32 i, u32 j) const { return a[std::size_t(i) * dim + j]; }

  static Mat identity(u32 d, u64 m);
  bool is_identity() const;

  bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& x, u64 e);

/// -I over the matrix modulus.
Mat mat_neg_identity(u32 dim, u64 mod);

/// Entries reduced into a smaller modulus.
Mat mat_reduce(const Mat& m, u64 new_mod);

/// Same entry values read in a larger modulus.
Mat mat_lift(const Mat& m, u64 new_mod);

/// Multiplicative order by repeated multiplication; 0 when it exceeds cap.
u64 mat_order(const Mat& m, u64 cap);

/// Exact-order test via prime-divisor powers of d.
bool mat_has_order(const Mat& m, u64 d);

/// Determinant of the mod-p reduction, p prime.
u64 det_mod_p(const Mat& m, u64 p);
bool invertible_mod_p(const Mat& m, u64 p);

u64 mat_trace(const Mat& m);

/// Canonical basis of {X : X*P = Q*X} over Z/p, p prime. P and Q are reduced
/// mod p first; basis matrices carry modulus p.
std::vector<Mat> solve_intertwine(const Mat& P, const Mat& Q, u64 p);

/// Joint solution space of several intertwine equations X*P_i = Q_i*X.
std::vector<Mat> solve_intertwine_multi(const std::vector<std::pair<Mat, Mat>>& eqs, u64 p);

/// Basis of {X : X*A = A^gamma * X} over Z/p (A over prime modulus).
std::vector<Mat> conjugator_space(const Mat& A, u64 gamma);

/// "[[0,4],[1,4]]"
std::string mat_text(const Mat& m);

/// Compact byte key for hashing.
std::string mat_key(const Mat& m);

}  // namespace pocfrob
