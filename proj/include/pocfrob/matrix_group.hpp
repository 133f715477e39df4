#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pocfrob/complement_spec.hpp"
#include "pocfrob/matrix.hpp"
#include "pocfrob/order_census.hpp"

namespace pocfrob {

inline constexpr u64 kDefaultCensusLimit = 20000;
inline constexpr u64 kDefaultMalnormalLimit = 2000;

/// Faithful matrix realization of a ComplementSpec over Z/p^k.
struct MatrixAction {
  u64 modulus = 0;  // p^k
  u64 prime = 0;
  u32 k = 1;
  u32 dim = 0;
  std::vector<std::pair<std::string, Mat>> generators;
  ComplementSpec spec;
};

/// BFS closure of a generator set; nullopt once the cap is exceeded.
std::optional<std::vector<Mat>> matrix_closure(const std::vector<Mat>& gens, u64 cap);

/// Closure of the action generators; throws when it does not match the spec
/// order.
std::vector<Mat> action_elements(const MatrixAction& action);

/// Orders, presentation relations, faithfulness (closure size). Throws
/// std::runtime_error with a reason on failure.
void verify_action(const MatrixAction& action);

/// Every non-identity element of the generated group fixes no nonzero vector
/// of (Z/p)^r, i.e. det(M - I) is a unit mod p. Checking the mod-p reduction
/// suffices: a fixed point mod p^k yields one of order p.
bool is_fixed_point_free(const MatrixAction& action);

/// Explicit finite group of matrices (plain or affine), closed under product.
struct ConcreteGroup {
  u64 modulus = 0;
  u32 dim = 0;
  std::vector<Mat> elements;
  std::optional<std::pair<u64, u64>> decomposition;  // (kernel size, complement size)
  std::vector<Mat> complement;                       // embedded complement copy

  u64 order() const { return elements.size(); }
};

ConcreteGroup group_from_matrices(u64 modulus, std::vector<Mat> elements);

/// K x| H on pairs (v, M): (v,M)(w,N) = (v + M*w, M*N), stored as affine
/// (r+1)x(r+1) matrices over Z/p^k. Rejects non-fixed-point-free actions.
ConcreteGroup semidirect_product(const HomocyclicKernel& kernel, const MatrixAction& action,
                                 u64 limit = kDefaultCensusLimit);

/// Exact order census by computing every element's order.
OrderCensus order_census_bruteforce(const ConcreteGroup& g, u64 limit = kDefaultCensusLimit);

/// H ∩ H^t = 1 for every t outside H.
bool is_malnormal(const ConcreteGroup& g, const std::vector<Mat>& complement,
                  u64 limit = kDefaultMalnormalLimit);

}  // namespace pocfrob
