#pragma once

#include <string>
#include <vector>

#include "pocfrob/classifier.hpp"

namespace pocfrob {

/// One row of the census of Frobenius groups with perfect order classes.
struct CensusRow {
  u64 order = 0;
  HomocyclicKernel kernel;
  ComplementSpec complement;
  Justification family = Justification::ThmC;
  std::string structure;  // kernel ":" complement, e.g. "C5^2:SL(2,3)"

  bool operator==(const CensusRow&) const = default;
};

/// All rows with order <= max_order, from the classified families:
/// rank-1 Pierpont kernels with cyclic complement, the four rank-2 cyclic
/// families, the five biprimary families, and the insoluble family.
/// Non-abelian candidates are kept only when the complement embeds
/// fixed-point-freely in GL(r, p). Sorted by (order, structure).
std::vector<CensusRow> census_enumerate(u64 max_order);

struct CrosscheckEntry {
  CensusRow row;
  bool realized = false;      // complement realized and lifted
  bool fpf = false;           // action fixed-point-free
  bool census_match = false;  // brute-force census equals the symbolic one
  bool poc = false;           // brute-force census has perfect order classes
  std::string message;

  bool pass() const { return realized && fpf && census_match && poc; }
};

/// Realize every row with order <= limit and compare the brute-force census
/// against the symbolic one. Failures are reported per row.
std::vector<CrosscheckEntry> census_crosscheck(const std::vector<CensusRow>& rows, u64 limit);

enum class RenderFormat { Tsv, Json, Markdown };

/// Deterministic serialization; columns order, kernel, complement, family,
/// structure.
std::string census_render(const std::vector<CensusRow>& rows, RenderFormat format);

}  // namespace pocfrob
