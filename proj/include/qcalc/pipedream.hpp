#ifndef QCALC_PIPEDREAM_HPP
#define QCALC_PIPEDREAM_HPP

#include <vector>

#include "qcalc/blockperm.hpp"
#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

struct PipeDream {
  Dims dims;
  std::vector<Cell> crosses;  // sorted, every cell with q + p <= d

  bool has_cross(int q, int p) const;
  friend bool operator==(const PipeDream&, const PipeDream&) = default;
};

// Pipe entering row q from the west exits the top at column trace(D)(q).
Permutation trace(const PipeDream& dream);

enum class Region {
  Full,    // every cell with q + p <= d
  Strict,  // column block >= row block + 1
};
enum class Mode { Reduced, All };
enum class Flavor { Chern, Csm };

// Region cells in reading order: rows bottom to top, west to east.  The
// letter of cell (q, p) is q + p - 1.
std::vector<Cell> reading_cells(const Dims& dims, Region region);

// Pipe dreams for v with crosses in `region`; Reduced requires |crosses| =
// l(v).  Ordered by the subword enumeration over reading_cells.
std::vector<PipeDream> enumerate(const Dims& dims, const Permutation& v, Region region, Mode mode);

// Product of (row label - column label) over crosses off D_Hom, times
// h^(L - |crosses|) for Csm.  Strict dreams only, unless region is Full,
// where only the exponent must stay nonnegative.  Throws RegionViolation.
Polynomial weight(const PipeDream& dream, Flavor flavor, Region region = Region::Strict);

// The linear form x^i_a - x^j_b attached to a cell.
Polynomial cell_label(const BlockStructure& blocks, Cell c);

Polynomial quiver_poly_pd(const RankArray& r, long* dream_count = nullptr);
// Throws DHomViolation when a contributing dream misses a D_Hom cell.
Polynomial csm_pd(const RankArray& r, Region region = Region::Strict, long* dream_count = nullptr);

}  // namespace qcalc

#endif  // QCALC_PIPEDREAM_HPP
