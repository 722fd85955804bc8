#include "qcalc/localization.hpp"

#include "qcalc/error.hpp"
#include "qcalc/pipedream.hpp"

namespace qcalc {

Word grid_word(const Dims& dims) {
  Word word{dims, {}, reading_cells(dims, Region::Strict)};
  for (const Cell& c : word.cells) word.letters.push_back(c.q + c.p - 1);
  return word;
}

std::vector<Polynomial> roots(const Word& word) {
  BlockStructure blocks(word.dims);
  int d = word.dims.d();
  auto z = [&](int q) { return Polynomial::x(blocks.row_block(q), blocks.row_offset(q)); };
  std::vector<int> uinv(d + 1);
  for (int k = 1; k <= d; ++k) uinv[k] = k;
  std::vector<Polynomial> out;
  for (int t : word.letters) {
    if (t < 1 || t >= d) throw InvalidInput("letter out of range");
    out.push_back(z(uinv[t]) - z(uinv[t + 1]));
    // u -> s_t * u, so u^{-1} -> u^{-1} * s_t
    std::swap(uinv[t], uinv[t + 1]);
  }
  return out;
}

namespace {

void require_reduced(const Word& word) {
  if (!is_reduced_word(word.letters, word.dims.d())) throw NotReducedWord();
}

struct Term {
  int hbar;
  std::vector<int> positions;
};

std::vector<Term> subword_terms(const Permutation& v, const Word& word, bool reduced) {
  std::vector<Term> out;
  int L = int(word.letters.size());
  enumerate_subwords(word.letters, v, reduced, [&](const std::vector<int>& pos) {
    out.push_back({reduced ? 0 : L - int(pos.size()), pos});
  });
  return out;
}

Polynomial expand(const Term& term, const std::vector<Polynomial>& beta) {
  Polynomial w = Polynomial::hbar().pow(unsigned(term.hbar));
  for (int j : term.positions) w *= beta[j];
  return w;
}

Polynomial expand_all(const std::vector<Term>& terms, const std::vector<Polynomial>& beta) {
  Polynomial total;
  for (const auto& t : terms) total += expand(t, beta);
  return total;
}

// Divides sum(num) by sum(den).  A one-term denominator is cancelled
// factor by factor; anything left over goes through exact_divide.
Polynomial divide_terms(const std::vector<Term>& num, const std::vector<Term>& den,
                        const std::vector<Polynomial>& beta) {
  if (den.size() != 1) return exact_divide(expand_all(num, beta), expand_all(den, beta));
  const Term& divisor = den.front();
  Polynomial quotient, leftover;
  for (const Term& term : num) {
    std::vector<Polynomial> factors;
    for (int j : term.positions) factors.push_back(beta[j]);
    int hbar = term.hbar - divisor.hbar;
    bool ok = hbar >= 0;
    for (int j : divisor.positions) {
      if (!ok) break;
      auto it = std::find(factors.begin(), factors.end(), beta[j]);
      if (it == factors.end()) {
        ok = false;
      } else {
        *it = std::move(factors.back());
        factors.pop_back();
      }
    }
    if (!ok) {
      leftover += expand(term, beta);
      continue;
    }
    Polynomial w = Polynomial::hbar().pow(unsigned(hbar));
    for (const auto& f : factors) w *= f;
    quotient += w;
  }
  if (!leftover.is_zero()) quotient += exact_divide(leftover, expand(divisor, beta));
  return quotient;
}

Permutation hom_zelevinsky(const Dims& dims) { return zelevinsky_permutation(hom_rank_array(dims)); }

}  // namespace

Polynomial ajs_billey(const Permutation& v, const Word& word) {
  require_reduced(word);
  return expand_all(subword_terms(v, word, true), roots(word));
}

Polynomial csm_restriction(const Permutation& v, const Word& word) {
  require_reduced(word);
  return expand_all(subword_terms(v, word, false), roots(word));
}

Polynomial quiver_poly_ratio(const RankArray& r) {
  validate(r);
  Word word = grid_word(r.dims());
  auto beta = roots(word);
  auto num = subword_terms(zelevinsky_permutation(r), word, true);
  auto den = subword_terms(hom_zelevinsky(r.dims()), word, true);
  return divide_terms(num, den, beta);
}

Polynomial csm_ratio(const RankArray& r) {
  validate(r);
  Word word = grid_word(r.dims());
  auto beta = roots(word);
  std::vector<Term> num;
  for_each_perm(r, [&](const Permutation& v) {
    for (auto& t : subword_terms(v, word, false)) num.push_back(std::move(t));
  });
  auto den = subword_terms(hom_zelevinsky(r.dims()), word, true);
  return divide_terms(num, den, beta);
}

}  // namespace qcalc
