#include "qcalc/quiver.hpp"

#include <algorithm>
#include <random>

#include "qcalc/error.hpp"

namespace qcalc {

Dims::Dims(std::vector<int> r) : r_(std::move(r)) {
  if (r_.empty()) throw InvalidInput("dimension vector is empty");
  for (int v : r_) {
    if (v < 1) throw InvalidInput("dimension vector entries must be positive");
    d_ += v;
  }
}

long Dims::hom_dim() const {
  long total = 0;
  for (int i = 0; i < n(); ++i) total += long(r_[i]) * r_[i + 1];
  return total;
}

TriangularArray::TriangularArray(const Dims& dims)
    : dims_(dims), data_(std::size_t(dims.n() + 1) * (dims.n() + 2) / 2, 0) {}

std::size_t TriangularArray::index(int i, int j) const {
  int n = dims_.n();
  if (i < 0 || j < i || j > n) throw InvalidInput("index (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") out of range");
  // rows i = 0..n of lengths n+1-i
  std::size_t before = std::size_t(i) * (n + 1) - std::size_t(i) * (i - 1) / 2;
  return before + (j - i);
}

long TriangularArray::get(int i, int j) const {
  if (i < 0 || j > dims_.n() || j < i) return 0;
  return at(i, j);
}

std::vector<std::pair<int, int>> LaceArray::laces() const {
  std::vector<std::pair<int, int>> out;
  int n = dims().n();
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      for (long c = 0; c < at(p, q); ++c) out.emplace_back(p, q);
  return out;
}

// ------------------------------------------------------------------ matrices

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::corner(int rows, int cols) const {
  IntMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix out(size, size);
  for (int i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

int rank(const IntMatrix& input) {
  IntMatrix m = input;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  Integer prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// ---------------------------------------------------------- rank/lace arrays

void validate(const RankArray& r) {
  const Dims& dims = r.dims();
  for (int i = 0; i <= dims.n(); ++i) {
    if (r.at(i, i) != dims[i])
      throw InvalidInput("rank entry (" + std::to_string(i) + "," + std::to_string(i) +
                         ") must equal r_" + std::to_string(i) + " = " + std::to_string(dims[i]));
    for (int j = i; j <= dims.n(); ++j)
      if (r.at(i, j) < 0)
        throw InvalidInput("rank entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is negative");
  }
  (void)lace_array(r);
}

LaceArray lace_array(const RankArray& r) {
  const Dims& dims = r.dims();
  LaceArray s(dims);
  for (int p = 0; p <= dims.n(); ++p)
    for (int q = p; q <= dims.n(); ++q) {
      long v = r.get(p, q) - r.get(p - 1, q) - r.get(p, q + 1) + r.get(p - 1, q + 1);
      if (v < 0) throw NotRealizable(p, q, v);
      s.at(p, q) = v;
    }
  return s;
}

RankArray rank_array(const LaceArray& s) {
  const Dims& dims = s.dims();
  int n = dims.n();
  for (int i = 0; i <= n; ++i) {
    long covered = 0;
    for (int p = 0; p <= i; ++p)
      for (int q = i; q <= n; ++q) {
        if (s.at(p, q) < 0) throw InvalidInput("lace entry (" + std::to_string(p) + "," +
                                               std::to_string(q) + ") is negative");
        covered += s.at(p, q);
      }
    if (covered != dims[i]) throw BadRowSums(i, covered, dims[i]);
  }
  RankArray r(dims);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      long v = 0;
      for (int p = 0; p <= i; ++p)
        for (int q = j; q <= n; ++q) v += s.at(p, q);
      r.at(i, j) = v;
    }
  return r;
}

RankArray hom_rank_array(const Dims& dims) {
  RankArray r(dims);
  for (int i = 0; i <= dims.n(); ++i) {
    long m = dims[i];
    for (int j = i; j <= dims.n(); ++j) {
      m = std::min<long>(m, dims[j]);
      r.at(i, j) = m;
    }
  }
  return r;
}

std::vector<RankArray> enumerate_rank_arrays(const Dims& dims) {
  int n = dims.n();
  std::vector<std::pair<int, int>> intervals;
  for (int p = 0; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) intervals.emplace_back(p, q);

  std::vector<RankArray> out;
  LaceArray s(dims);
  std::vector<long> remaining(dims.values().begin(), dims.values().end());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == intervals.size()) {
      for (int i = 0; i <= n; ++i) s.at(i, i) = remaining[i];
      out.push_back(rank_array(s));
      return;
    }
    auto [p, q] = intervals[k];
    long cap = *std::min_element(remaining.begin() + p, remaining.begin() + q + 1);
    for (long c = 0; c <= cap; ++c) {
      s.at(p, q) = c;
      for (int i = p; i <= q; ++i) remaining[i] -= c;
      self(self, k + 1);
      for (int i = p; i <= q; ++i) remaining[i] += c;
    }
    s.at(p, q) = 0;
  };
  rec(rec, 0);
  return out;
}

// ----------------------------------------------------------- representations

Rep representative(const LaceArray& s) {
  const Dims& dims = s.dims();
  int n = dims.n();
  auto laces = s.laces();
  // basis[i] = indices into laces of those passing through i
  std::vector<std::vector<int>> basis(n + 1);
  for (int k = 0; k < int(laces.size()); ++k)
    for (int i = laces[k].first; i <= laces[k].second; ++i) basis[i].push_back(k);
  Rep rep{dims, {}};
  for (int k = 1; k <= n; ++k) {
    IntMatrix phi(dims[k], dims[k - 1]);
    for (int b = 0; b < int(basis[k - 1].size()); ++b) {
      auto it = std::find(basis[k].begin(), basis[k].end(), basis[k - 1][b]);
      if (it != basis[k].end()) phi(int(it - basis[k].begin()), b) = 1;
    }
    rep.phi.push_back(std::move(phi));
  }
  return rep;
}

namespace {

// Unit lower and unit upper triangular factors and the inverse of their product.
struct Unipotent {
  IntMatrix g, inverse;
};

IntMatrix unitriangular_inverse(const IntMatrix& t, bool lower) {
  int size = t.rows();
  IntMatrix inv = IntMatrix::identity(size);
  // solve column by column; t has unit diagonal
  for (int c = 0; c < size; ++c) {
    if (lower) {
      for (int i = c + 1; i < size; ++i) {
        Integer acc = 0;
        for (int k = c; k < i; ++k) acc += t(i, k) * inv(k, c);
        inv(i, c) = -acc;
      }
    } else {
      for (int i = c - 1; i >= 0; --i) {
        Integer acc = 0;
        for (int k = i + 1; k <= c; ++k) acc += t(i, k) * inv(k, c);
        inv(i, c) = -acc;
      }
    }
  }
  return inv;
}

Unipotent random_unipotent(int size, std::mt19937_64& rng) {
  auto entry = [&] { return Integer(long(rng() % 2001) - 1000); };
  IntMatrix lo = IntMatrix::identity(size), up = IntMatrix::identity(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (j < i) lo(i, j) = entry();
      if (j > i) up(i, j) = entry();
    }
  return {lo * up, unitriangular_inverse(up, false) * unitriangular_inverse(lo, true)};
}

}  // namespace

Rep generic_point(const LaceArray& s, std::uint64_t seed) {
  Rep rep = representative(s);
  std::mt19937_64 rng(seed);
  std::vector<Unipotent> g;
  for (int i = 0; i <= rep.dims.n(); ++i) g.push_back(random_unipotent(rep.dims[i], rng));
  for (int k = 1; k <= rep.dims.n(); ++k) rep.phi[k - 1] = g[k].g * rep.phi[k - 1] * g[k - 1].inverse;
  return rep;
}

RankArray rank_array_of(const Rep& rep) {
  const Dims& dims = rep.dims;
  RankArray r(dims);
  for (int i = 0; i <= dims.n(); ++i) {
    r.at(i, i) = dims[i];
    IntMatrix composite = IntMatrix::identity(dims[i]);
    for (int j = i + 1; j <= dims.n(); ++j) {
      composite = rep.phi[j - 1] * composite;
      r.at(i, j) = rank(composite);
    }
  }
  return r;
}

IntMatrix zelevinsky_matrix(const Rep& rep) {
  const Dims& dims = rep.dims;
  int n = dims.n(), d = dims.d();
  std::vector<int> row_start(n + 1), col_start(n + 1);
  for (int i = 0, pos = 0; i <= n; ++i) {
    row_start[i] = pos;
    pos += dims[i];
  }
  for (int j = n, pos = 0; j >= 0; --j) {
    col_start[j] = pos;
    pos += dims[j];
  }
  IntMatrix z(d, d);
  for (int i = 0; i <= n; ++i) {
    for (int a = 0; a < dims[i]; ++a) z(row_start[i] + a, col_start[i] + a) = 1;
    if (i == n) continue;
    const IntMatrix& phi = rep.phi[i];
    for (int a = 0; a < dims[i]; ++a)
      for (int b = 0; b < dims[i + 1]; ++b) z(row_start[i] + a, col_start[i + 1] + b) = phi(b, a);
  }
  return z;
}

std::vector<int> northwest_ranks(const IntMatrix& m) {
  std::vector<int> out;
  out.reserve(std::size_t(m.rows()) * m.cols());
  for (int q = 1; q <= m.rows(); ++q)
    for (int p = 1; p <= m.cols(); ++p) out.push_back(rank(m.corner(q, p)));
  return out;
}

}  // namespace qcalc
