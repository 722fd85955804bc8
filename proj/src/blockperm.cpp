#include "qcalc/blockperm.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > size() || seen[x]) throw InvalidInput("not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> w(d);
  for (int k = 0; k < d; ++k) w[k] = k + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int d) {
  std::vector<int> w(d);
  for (int k = 0; k < d; ++k) w[k] = d - k;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int t, int d) {
  if (t < 1 || t >= d) throw InvalidInput("simple transposition index out of range");
  Permutation s = identity(d);
  std::swap(s.w_[t - 1], s.w_[t]);
  return s;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("bad permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  } else {
    std::stringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InvalidInput("bad permutation '" + std::string(text) + "'");
      }
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int k = 0; k < size(); ++k) inv[w_[k] - 1] = k + 1;
  Permutation out;
  out.w_ = std::move(inv);
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b) inv += w_[a] > w_[b];
  return inv;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (w_[k] != k + 1) return false;
  return true;
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw SizeMismatch(v.w_.size(), w.w_.size());
  Permutation out;
  out.w_.resize(w.w_.size());
  for (int k = 0; k < w.size(); ++k) out.w_[k] = v.w_[w.w_[k] - 1];
  return out;
}

std::string to_string(const Permutation& v) {
  std::string out;
  for (int k = 1; k <= v.size(); ++k) {
    if (v.size() > 9 && k > 1) out += ',';
    out += std::to_string(v(k));
  }
  return out;
}

Permutation composite(const std::vector<int>& letters, int d) {
  std::vector<int> w(d);
  for (int k = 0; k < d; ++k) w[k] = k + 1;
  // left-multiplying by s_t swaps the values t and t+1
  for (int t : letters) {
    if (t < 1 || t >= d) throw InvalidInput("letter out of range");
    for (int& x : w)
      if (x == t)
        x = t + 1;
      else if (x == t + 1)
        x = t;
  }
  return Permutation(std::move(w));
}

bool is_reduced_word(const std::vector<int>& letters, int d) {
  return composite(letters, d).length() == int(letters.size());
}

namespace {

// Left descents t of v, i.e. l(s_t v) < l(v).
std::vector<int> left_descents(const Permutation& v) {
  Permutation inv = v.inverse();
  std::vector<int> out;
  for (int t = 1; t < v.size(); ++t)
    if (inv(t) > inv(t + 1)) out.push_back(t);
  return out;
}

void reduced_words_rec(const Permutation& v, std::vector<int>& suffix,
                       std::vector<std::vector<int>>& out) {
  if (v.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int t : left_descents(v)) {
    suffix.push_back(t);
    reduced_words_rec(Permutation::simple(t, v.size()) * v, suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& v) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  reduced_words_rec(v, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sample_reduced_words(const Permutation& v, int count,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> out;
  for (int c = 0; c < count; ++c) {
    Permutation w = v;
    std::vector<int> word;
    while (!w.is_identity()) {
      auto desc = left_descents(w);
      int t = desc[rng() % desc.size()];
      word.push_back(t);
      w = Permutation::simple(t, w.size()) * w;
    }
    out.emplace_back(word.rbegin(), word.rend());
  }
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw SizeMismatch(std::size_t(x.size()), std::size_t(y.size()));
  int d = x.size();
  // compare #{a <= i : w(a) >= k} for all i, k
  std::vector<int> cx(d + 2, 0), cy(d + 2, 0);
  for (int i = 1; i <= d; ++i) {
    for (int k = 1; k <= x(i); ++k) ++cx[k];
    for (int k = 1; k <= y(i); ++k) ++cy[k];
    for (int k = 1; k <= d; ++k)
      if (cx[k] > cy[k]) return false;
  }
  return true;
}

// --------------------------------------------------------------- blocks

BlockStructure::BlockStructure(const Dims& dims) : dims_(dims) {
  int n = dims.n();
  row_start_.resize(n + 1);
  col_start_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    row_start_[i] = int(row_block_.size()) + 1;
    for (int a = 1; a <= dims[i]; ++a) {
      row_block_.push_back(i);
      row_offset_.push_back(a);
    }
  }
  for (int j = n; j >= 0; --j) {
    col_start_[j] = int(col_block_.size()) + 1;
    for (int b = 1; b <= dims[j]; ++b) {
      col_block_.push_back(j);
      col_offset_.push_back(b);
    }
  }
}

BlockCounts block_counts(const RankArray& r) {
  int n = r.dims().n();
  LaceArray s = lace_array(r);
  BlockCounts m(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) m(i, j) = s.at(j, i);
    if (i < n) m(i, i + 1) = r.at(i, i + 1);
  }
  return m;
}

BlockCounts counts_of(const Permutation& v, const BlockStructure& blocks) {
  BlockCounts m(blocks.dims().n());
  for (int q = 1; q <= v.size(); ++q) ++m(blocks.row_block(q), blocks.col_block(v(q)));
  return m;
}

Permutation block_w0(const Dims& dims) {
  std::vector<int> w;
  int start = 0;
  for (int i = 0; i <= dims.n(); ++i) {
    for (int a = dims[i]; a >= 1; --a) w.push_back(start + a);
    start += dims[i];
  }
  return Permutation(std::move(w));
}

Permutation zelevinsky_permutation(const RankArray& r) {
  const Dims& dims = r.dims();
  int n = dims.n();
  BlockStructure blocks(dims);
  BlockCounts m = block_counts(r);
  std::vector<int> next(n + 1);
  for (int j = 0; j <= n; ++j) next[j] = blocks.col_start(j);
  std::vector<int> w;
  for (int i = 0; i <= n; ++i)
    for (int j = std::min(i + 1, n); j >= 0; --j)
      for (long c = 0; c < m(i, j); ++c) w.push_back(next[j]++);
  return Permutation(std::move(w));
}

void for_each_perm(const RankArray& r, const std::function<void(const Permutation&)>& visit) {
  const Dims& dims = r.dims();
  int d = dims.d();
  BlockStructure blocks(dims);
  BlockCounts m = block_counts(r);
  std::vector<int> w(d);
  std::vector<char> used(d + 1, 0);
  auto rec = [&](auto&& self, int q) -> void {
    if (q > d) {
      visit(Permutation(w));
      return;
    }
    int i = blocks.row_block(q);
    for (int p = 1; p <= d; ++p) {
      if (used[p]) continue;
      long& left = m(i, blocks.col_block(p));
      if (left == 0) continue;
      --left;
      used[p] = 1;
      w[q - 1] = p;
      self(self, q + 1);
      used[p] = 0;
      ++left;
    }
  };
  rec(rec, 1);
}

std::vector<Permutation> perm_set(const RankArray& r) {
  std::vector<Permutation> out;
  for_each_perm(r, [&](const Permutation& v) { out.push_back(v); });
  return out;
}

std::vector<Cell> rothe_diagram(const Permutation& v) {
  Permutation inv = v.inverse();
  std::vector<Cell> out;
  for (int q = 1; q <= v.size(); ++q)
    for (int p = 1; p <= v.size(); ++p)
      if (v(q) > p && inv(p) > q) out.push_back({q, p});
  return out;
}

Regions regions(const Dims& dims) {
  BlockStructure blocks(dims);
  Regions out;
  for (int q = 1; q <= dims.d(); ++q)
    for (int p = 1; p <= dims.d(); ++p) {
      int gap = blocks.col_block(p) - blocks.row_block(q);
      if (gap >= 1) out.strict_cells.push_back({q, p});
      if (gap >= 2) out.dhom_cells.push_back({q, p});
    }
  out.L = int(out.strict_cells.size());
  return out;
}

// ------------------------------------------------------------- subwords

void enumerate_subwords(const std::vector<int>& letters, const Permutation& target,
                        bool reduced_only,
                        const std::function<void(const std::vector<int>&)>& visit) {
  int d = target.size();
  int len = int(letters.size());
  // demazure[j] = Demazure product of letters j..len-1 in word order
  std::vector<Permutation> demazure(len + 1);
  demazure[len] = Permutation::identity(d);
  for (int j = len - 1; j >= 0; --j) {
    std::vector<int> y = demazure[j + 1].one_line();
    int t = letters[j];
    if (t < 1 || t >= d) throw InvalidInput("letter out of range");
    if (y[t - 1] < y[t]) std::swap(y[t - 1], y[t]);
    demazure[j] = Permutation(std::move(y));
  }
  const int target_len = target.length();

  std::vector<int> u(d), uinv(d);  // prefix composite and its inverse, 0-based values
  for (int k = 0; k < d; ++k) u[k] = uinv[k] = k;
  int u_len = 0;
  std::vector<int> chosen;
  std::vector<int> x(d);

  auto feasible = [&](int j) {
    for (int k = 0; k < d; ++k) x[k] = target(uinv[k] + 1);
    Permutation rest(x);
    if (!bruhat_leq(rest, demazure[j])) return false;
    return !reduced_only || rest.length() + u_len == target_len;
  };

  auto rec = [&](auto&& self, int j) -> void {
    if (!feasible(j)) return;
    if (j == len) {
      visit(chosen);
      return;
    }
    int t = letters[j];
    // s_t * u swaps the values t-1, t (0-based) in u
    bool up = uinv[t - 1] < uinv[t];
    if (!reduced_only || up) {
      std::swap(u[uinv[t - 1]], u[uinv[t]]);
      std::swap(uinv[t - 1], uinv[t]);
      u_len += up ? 1 : -1;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
      u_len -= up ? 1 : -1;
      std::swap(uinv[t - 1], uinv[t]);
      std::swap(u[uinv[t - 1]], u[uinv[t]]);
    }
    self(self, j + 1);
  };
  rec(rec, 0);
}

}  // namespace qcalc
