#ifndef QCALC_CGPD_HPP
#define QCALC_CGPD_HPP

#include <string>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

// Strands run west and south.  Arcs:
//   Blank {}            H {E-W}      V {N-S}      Cross {E-W, N-S}
//   ElbowSE {S-E}       ElbowNW {N-W}             Bump {N-W, S-E}
enum class Tile { Blank, H, V, Cross, ElbowSE, ElbowNW, Bump };

char tile_code(Tile t);            // . - | + r j b
Tile tile_from_code(char code);    // also accepts 'h' and 'v'; throws InvalidInput

// Rectangle i (0 <= i < n) is r_i x r_{i+1}; rectangle n has no tiles.
struct Cgpd {
  using Grid = std::vector<std::vector<Tile>>;
  Dims dims;
  std::vector<Grid> rects;

  friend bool operator==(const Cgpd&, const Cgpd&) = default;
};

struct PathStep {
  int rect, row, col;  // row, col 1-based inside the rectangle
};

// A pipe enters rectangle `start` at east row `entry_row` and leaves for
// good from rectangle `end`; it realizes the lace [start, end].
struct PipePath {
  int start = 0, end = 0;
  int entry_row = 0;
  std::vector<PathStep> cells;
};

// Routes every pipe and checks edges, colors and the lace multiset of r.
std::vector<PipePath> validate(const Cgpd& cgpd, const RankArray& r);

// Sorted by the row-major tile code string.
std::vector<Cgpd> enumerate_cgpd(const RankArray& r);

// Crossing-type tiles (Cross, H, V).
int crossing_count(const Cgpd& cgpd);

// Product of the tile weights; colors come from routing.  Throws InvalidCgpd
// for grids whose routing breaks.
Polynomial cgpd_weight(const Cgpd& cgpd);
// Product over crossing-type tiles of x^i_j - x^{i+1}_k.
Polynomial crossing_weight(const Cgpd& cgpd);

Polynomial csm_cgpd(const RankArray& r, long* count = nullptr);
// Sum of crossing weights over the CGPDs with the fewest crossing tiles.
Polynomial quiver_poly_cgpd(const RankArray& r, long* total = nullptr, long* minimal = nullptr);

// Rows of codes, rectangles separated by blank lines.
std::string codes(const Cgpd& cgpd);

}  // namespace qcalc

#endif  // QCALC_CGPD_HPP
