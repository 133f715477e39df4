#pragma once

#include <optional>

#include "pocfrob/matrix_group.hpp"

namespace pocfrob {

/// First matrix of multiplicative order exactly d among companion matrices of
/// monic degree-r polynomials over Z/p, in a fixed scan order (coefficient
/// tuples read little-endian, ascending). Returns the identity for d = 1 and
/// empty when no companion matrix has order d. Throws when p | d.
std::optional<Mat> element_of_order(u64 d, u32 r, u64 p);

/// Exhaustive witness search for a subgroup of GL(r, p) isomorphic to the
/// spec, deterministic (first witness in canonical scan order):
///   - candidates for the distinguished cyclic generator run over all
///     block-diagonal joins of companion matrices (all semisimple classes);
///   - conjugating generators come from the intertwining solution space;
///   - SL(2,3)/SL(2,5) use binary polyhedral presentations, dimension 2 only.
/// Empty result means no such subgroup exists.
std::optional<MatrixAction> realize_complement(const ComplementSpec& spec, u32 r, u64 p);

/// Lifts a mod-p action to Z/p^k. Each generator is lifted entrywise and
/// order-corrected via M^e with e = 1 (mod d), e = 0 (mod p^{2k}); when the
/// joint relations fail for a later generator, its full fiber over the mod-p
/// matrix is searched in deterministic order. Throws std::runtime_error when
/// no lift passes verification.
MatrixAction lift_action(const MatrixAction& action, u32 k);

}  // namespace pocfrob
