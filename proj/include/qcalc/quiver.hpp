#ifndef QCALC_QUIVER_HPP
#define QCALC_QUIVER_HPP

#include <cstdint>
#include <vector>

#include "qcalc/poly.hpp"

namespace qcalc {

// Dimension vector r_0..r_n of V_0 -> V_1 -> ... -> V_n.
class Dims {
public:
  Dims() = default;
  explicit Dims(std::vector<int> r);

  int n() const { return static_cast<int>(r_.size()) - 1; }
  int d() const { return d_; }
  int operator[](int i) const { return r_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return r_; }
  // Sum of r_i r_{i+1}, the dimension of Hom.
  long hom_dim() const;

  friend bool operator==(const Dims&, const Dims&) = default;

private:
  std::vector<int> r_;
  int d_ = 0;
};

// Integer array indexed by 0 <= i <= j <= n.
class TriangularArray {
public:
  TriangularArray() = default;
  explicit TriangularArray(const Dims& dims);

  const Dims& dims() const { return dims_; }
  long& at(int i, int j) { return data_[index(i, j)]; }
  long at(int i, int j) const { return data_[index(i, j)]; }
  // Zero outside 0 <= i <= j <= n.
  long get(int i, int j) const;

  friend bool operator==(const TriangularArray&, const TriangularArray&) = default;

private:
  std::size_t index(int i, int j) const;

  Dims dims_;
  std::vector<long> data_;
};

// r_ij = rank of the composite V_i -> V_j.
struct RankArray : TriangularArray {
  using TriangularArray::TriangularArray;
};

// s_pq = multiplicity of the indecomposable supported on [p, q].
struct LaceArray : TriangularArray {
  using TriangularArray::TriangularArray;
  // Intervals with multiplicity, sorted by (p, q).
  std::vector<std::pair<int, int>> laces() const;
};

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Integer& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transpose() const;
  // Top `rows` rows and left `cols` columns.
  IntMatrix corner(int rows, int cols) const;
  static IntMatrix identity(int size);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Exact rank by fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);

struct Rep {
  Dims dims;
  // phi[k-1] is the r_k x r_{k-1} matrix of V_{k-1} -> V_k.
  std::vector<IntMatrix> phi;
};

// Checks r_ii = r_i and nonnegativity, then realizability.  Throws
// InvalidInput or NotRealizable.
void validate(const RankArray& r);

LaceArray lace_array(const RankArray& r);
RankArray rank_array(const LaceArray& s);
RankArray hom_rank_array(const Dims& dims);
std::vector<RankArray> enumerate_rank_arrays(const Dims& dims);

// Direct sum of indecomposables with 0/1 matrices.  The basis of V_i lists
// the laces through i in LaceArray::laces() order.
Rep representative(const LaceArray& s);
// A fixed integer base change of representative(s) by unipotent matrices
// with entries in [-1000, 1000].  Same orbit, deterministic.
Rep generic_point(const LaceArray& s, std::uint64_t seed = 0x5eedULL);
RankArray rank_array_of(const Rep& rep);

// Identity blocks on the block antidiagonal and the transposed phi_{i+1} in
// block row i, block column i+1 (block columns counted right to left).
IntMatrix zelevinsky_matrix(const Rep& rep);

// rank of every top-q by left-p corner, q, p = 1..rows/cols, row-major.
std::vector<int> northwest_ranks(const IntMatrix& m);

}  // namespace qcalc

#endif  // QCALC_QUIVER_HPP
