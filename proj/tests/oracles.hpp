#ifndef QCALC_TESTS_ORACLES_HPP
#define QCALC_TESTS_ORACLES_HPP

// Brute-force reference implementations.  Deliberately naive and written
// without the library's enumeration or pruning code.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qcalc/blockperm.hpp"
#include "qcalc/cgpd.hpp"
#include "qcalc/pipedream.hpp"
#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace oracle {

using qcalc::Cell;
using qcalc::Dims;
using qcalc::Permutation;
using qcalc::Polynomial;
using Perm = std::vector<int>;  // one-line, 1-based values

// Rank over Q by plain Gaussian elimination with rationals.
int rank_q(const std::vector<std::vector<long>>& m);

// Every nonnegative lace table with the right row sums, found by scanning
// all tables with entries in [0, max r].
std::vector<std::map<std::pair<int, int>, long>> all_lace_tables(const Dims& dims);

// Build the direct sum of indecomposables as 0/1 matrices and measure the
// ranks of all composites.
std::map<std::pair<int, int>, long> ranks_of_direct_sum(const Dims& dims,
                                                         const std::map<std::pair<int, int>, long>& s);

std::vector<Perm> all_perms(int d);
int inversions(const Perm& w);
// m(i, j) of a permutation, blocks as in the paper's Zelevinsky matrix.
std::map<std::pair<int, int>, long> block_counts_of(const Dims& dims, const Perm& w);
std::vector<Perm> perm_set_brute(const qcalc::RankArray& r);

// Tile-walking tracer: crosses pass straight, bumps turn.
Perm trace_walk(int d, const std::set<std::pair<int, int>>& crosses);
// Permutation matrix NW ranks: #{a <= q : w(a) <= p}.
std::vector<int> perm_northwest_ranks(const Perm& w);

// Every subset of `cells` (at most ~20 of them) with its traced permutation.
struct Dream {
  std::set<std::pair<int, int>> crosses;
  Perm w;
};
std::vector<Dream> all_dreams(int d, const std::vector<Cell>& cells);

// Reduced words of w by brute force over all words of length l(w).
std::set<std::vector<int>> reduced_words_brute(const Perm& w);

// Subword sum over all position subsets, no pruning.
Polynomial subword_sum_brute(const std::vector<int>& letters, const std::vector<Polynomial>& roots,
                             const Perm& v, bool reduced_only, bool with_hbar);

// Every grid of tiles with the given shape that validates against r.
std::vector<qcalc::Cgpd> cgpd_brute(const qcalc::RankArray& r);

}  // namespace oracle

#endif  // QCALC_TESTS_ORACLES_HPP
