#include "qcalc/pipedream.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcalc/error.hpp"

namespace qcalc {

bool PipeDream::has_cross(int q, int p) const {
  return std::binary_search(crosses.begin(), crosses.end(), Cell{q, p});
}

Permutation trace(const PipeDream& dream) {
  int d = dream.dims.d();
  std::vector<std::vector<char>> cross(d + 2, std::vector<char>(d + 2, 0));
  for (const Cell& c : dream.crosses) {
    if (c.q < 1 || c.p < 1 || c.q + c.p > d)
      throw InvalidInput("cross (" + std::to_string(c.q) + "," + std::to_string(c.p) +
                         ") not above the antidiagonal");
    cross[c.q][c.p] = 1;
  }
  std::vector<int> w(d);
  for (int start = 1; start <= d; ++start) {
    int q = start, p = 1;
    bool east = true;
    while (q >= 1) {
      if (cross[q][p]) {
        if (east) ++p; else --q;
      } else if (east) {
        east = false;
        --q;
      } else {
        east = true;
        ++p;
      }
    }
    w[start - 1] = p;
  }
  return Permutation(std::move(w));
}

std::vector<Cell> reading_cells(const Dims& dims, Region region) {
  BlockStructure blocks(dims);
  int d = dims.d();
  std::vector<Cell> out;
  for (int q = d; q >= 1; --q)
    for (int p = 1; p + q <= d; ++p)
      if (region == Region::Full || blocks.col_block(p) >= blocks.row_block(q) + 1)
        out.push_back({q, p});
  return out;
}

std::vector<PipeDream> enumerate(const Dims& dims, const Permutation& v, Region region, Mode mode) {
  if (v.size() != dims.d()) throw SizeMismatch(std::size_t(v.size()), std::size_t(dims.d()));
  auto cells = reading_cells(dims, region);
  std::vector<int> letters;
  for (const Cell& c : cells) letters.push_back(c.q + c.p - 1);
  std::vector<PipeDream> out;
  enumerate_subwords(letters, v, mode == Mode::Reduced, [&](const std::vector<int>& pos) {
    PipeDream dream{dims, {}};
    for (int j : pos) dream.crosses.push_back(cells[j]);
    std::sort(dream.crosses.begin(), dream.crosses.end());
    if (trace(dream) != v) throw std::logic_error("pipe dream does not trace to its target");
    out.push_back(std::move(dream));
  });
  return out;
}

Polynomial cell_label(const BlockStructure& blocks, Cell c) {
  return Polynomial::x(blocks.row_block(c.q), blocks.row_offset(c.q)) -
         Polynomial::x(blocks.col_block(c.p), blocks.col_offset(c.p));
}

Polynomial weight(const PipeDream& dream, Flavor flavor, Region region) {
  BlockStructure blocks(dream.dims);
  int L = int(regions(dream.dims).L);
  Polynomial w(1L);
  for (const Cell& c : dream.crosses) {
    int gap = blocks.col_block(c.p) - blocks.row_block(c.q);
    if (region == Region::Strict && gap < 1) throw RegionViolation(c.q, c.p);
    if (gap >= 2) continue;
    w *= cell_label(blocks, c);
  }
  if (flavor == Flavor::Csm) {
    int excess = L - int(dream.crosses.size());
    if (excess < 0) throw RegionViolation(dream.crosses.back().q, dream.crosses.back().p);
    w *= Polynomial::hbar().pow(unsigned(excess));
  }
  return w;
}

Polynomial quiver_poly_pd(const RankArray& r, long* dream_count) {
  validate(r);
  auto dreams = enumerate(r.dims(), zelevinsky_permutation(r), Region::Strict, Mode::Reduced);
  Polynomial total;
  for (const auto& dream : dreams) total += weight(dream, Flavor::Chern);
  if (dream_count) *dream_count = long(dreams.size());
  return total;
}

Polynomial csm_pd(const RankArray& r, Region region, long* dream_count) {
  validate(r);
  const Dims& dims = r.dims();
  auto dhom = regions(dims).dhom_cells;
  Polynomial total;
  long count = 0;
  for_each_perm(r, [&](const Permutation& v) {
    for (const auto& dream : enumerate(dims, v, region, Mode::All)) {
      for (const Cell& c : dhom)
        if (!dream.has_cross(c.q, c.p)) throw DHomViolation(c.q, c.p);
      total += weight(dream, Flavor::Csm, region);
      ++count;
    }
  });
  if (dream_count) *dream_count = count;
  return total;
}

}  // namespace qcalc
