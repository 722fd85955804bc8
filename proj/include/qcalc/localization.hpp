#ifndef QCALC_LOCALIZATION_HPP
#define QCALC_LOCALIZATION_HPP

#include <vector>

#include "qcalc/blockperm.hpp"
#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

// Word t_1..t_L in simple transpositions; its composite is
// s_{t_L} * ... * s_{t_1}.  The alphabet z_q = x^{row_block(q)}_{offset}
// comes from `dims`.
struct Word {
  Dims dims;
  std::vector<int> letters;
  std::vector<Cell> cells;  // grid words only
};

// Letters q + p - 1 over the strict cells in reading order.
Word grid_word(const Dims& dims);

// beta_j = u^{-1} . (z_t - z_{t+1}) with u the composite of the first j-1
// letters, permutations acting on subscripts.
std::vector<Polynomial> roots(const Word& word);

// Both throw NotReducedWord unless `word` is reduced.
// Sum over reduced subwords for v of the root products.
Polynomial ajs_billey(const Permutation& v, const Word& word);
// Sum over all subwords for v of h^(L - |J|) times the root product.
Polynomial csm_restriction(const Permutation& v, const Word& word);

// Numerator and denominator are kept as sums of root products so that the
// denominator's linear factors cancel before anything is expanded.
Polynomial quiver_poly_ratio(const RankArray& r);
Polynomial csm_ratio(const RankArray& r);

}  // namespace qcalc

#endif  // QCALC_LOCALIZATION_HPP
