#ifndef QCALC_BLOCKPERM_HPP
#define QCALC_BLOCKPERM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/quiver.hpp"

namespace qcalc {

// Permutation of {1..d} in one-line notation.  Composition is
// (v * w)(k) = v(w(k)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int d);
  static Permutation longest(int d);
  // s_t swaps t and t+1.
  static Permutation simple(int t, int d);
  // "34512678" for d <= 9; otherwise comma separated values.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_[std::size_t(k - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> w_;
};

// Digit string for d <= 9, otherwise comma separated.
std::string to_string(const Permutation& v);

// s_{t_L} * ... * s_{t_1}: the first letter acts first.
Permutation composite(const std::vector<int>& letters, int d);
bool is_reduced_word(const std::vector<int>& letters, int d);
// Every reduced word of v, lexicographically sorted.
std::vector<std::vector<int>> all_reduced_words(const Permutation& v);
// `count` random reduced words (with repetition) from a fixed seed.
std::vector<std::vector<int>> sample_reduced_words(const Permutation& v, int count,
                                                   std::uint64_t seed);

bool bruhat_leq(const Permutation& x, const Permutation& y);

// Grid cell, 1-based row q (top to bottom) and column p (left to right).
struct Cell {
  int q = 0, p = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class BlockStructure {
public:
  explicit BlockStructure(const Dims& dims);

  const Dims& dims() const { return dims_; }
  int d() const { return dims_.d(); }
  // 1-based row/column in, block index and 1-based offset out.  Column
  // blocks run r_n, ..., r_0 from the left, so the rightmost is block 0.
  int row_block(int q) const { return row_block_[q - 1]; }
  int row_offset(int q) const { return row_offset_[q - 1]; }
  int col_block(int p) const { return col_block_[p - 1]; }
  int col_offset(int p) const { return col_offset_[p - 1]; }
  int row_start(int i) const { return row_start_[i]; }  // first row of block i
  int col_start(int j) const { return col_start_[j]; }  // first column of block j

private:
  Dims dims_;
  std::vector<int> row_block_, row_offset_, col_block_, col_offset_, row_start_, col_start_;
};

// m(i, j): number of ones in block row i, block column j.
class BlockCounts {
public:
  explicit BlockCounts(int n) : n_(n), m_(std::size_t(n + 1) * (n + 1), 0) {}
  long& operator()(int i, int j) { return m_[std::size_t(i) * (n_ + 1) + j]; }
  long operator()(int i, int j) const { return m_[std::size_t(i) * (n_ + 1) + j]; }
  int n() const { return n_; }
  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;

private:
  int n_;
  std::vector<long> m_;
};

BlockCounts block_counts(const RankArray& r);
BlockCounts counts_of(const Permutation& v, const BlockStructure& blocks);

// Antidiagonal within each diagonal block of sizes r_0..r_n.
Permutation block_w0(const Dims& dims);
Permutation zelevinsky_permutation(const RankArray& r);

// perm(r) in lexicographic order of one-line notation.
std::vector<Permutation> perm_set(const RankArray& r);
void for_each_perm(const RankArray& r, const std::function<void(const Permutation&)>& visit);

std::vector<Cell> rothe_diagram(const Permutation& v);

struct Regions {
  std::vector<Cell> strict_cells;  // column block >= row block + 1
  std::vector<Cell> dhom_cells;    // column block >= row block + 2
  int L = 0;
};
Regions regions(const Dims& dims);

// Calls `visit(positions)` for every set of positions J into `letters`
// whose composite (in word order) is `target`; with `reduced_only` the
// subword must also be reduced.  Visits in lexicographic order of the
// 0/1 choice vector with "take" before "skip".
void enumerate_subwords(const std::vector<int>& letters, const Permutation& target,
                        bool reduced_only,
                        const std::function<void(const std::vector<int>&)>& visit);

}  // namespace qcalc

#endif  // QCALC_BLOCKPERM_HPP
