#ifndef QCALC_POLY_HPP
#define QCALC_POLY_HPP

// Exact sparse polynomials over Z in the equivariant alphabet x^level_index
// and the dilation weight hbar.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qcalc {

using Integer = mpz_class;

// x^level_index, or hbar.  Ordered by (level, index) with hbar last.
struct Variable {
  static constexpr int kHbarLevel = std::numeric_limits<int>::max();

  int level = 0;
  int index = 1;

  static constexpr Variable x(int level, int index) { return Variable{level, index}; }
  static constexpr Variable hbar() { return Variable{kHbarLevel, 0}; }

  constexpr bool is_hbar() const { return level == kHbarLevel; }

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(Variable v) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(num).
  friend Monomial operator/(const Monomial& num, const Monomial& den);
  // Drops every power of v.
  Monomial without(Variable v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Graded lexicographic order: total degree first, then the exponent of the
// earliest variable (in Variable order) wins.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) < 0; }
};

enum class Style {
  Ascii,         // x0_1*x1_2 - 2*h^2
  Letters,       // a1*b2 - 2*h^2
  Latex,         // x^{0}_{1} x^{1}_{2} - 2 \hbar^{2}
  LatexLetters,  // a_{1} b_{2} - 2 \hbar^{2}
};

std::string to_string(Variable v, Style style = Style::Ascii);

class Polynomial {
public:
  using Terms = std::map<Monomial, Integer, GrlexLess>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Integer& coefficient = 1);

  static Polynomial x(int level, int index) { return Polynomial(Variable::x(level, index)); }
  static Polynomial hbar() { return Polynomial(Variable::hbar()); }

  // Terms in ascending grlex order; iterate in reverse for canonical order.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Largest term under grlex.  Requires !is_zero().
  const Terms::value_type& leading_term() const { return *terms_.rbegin(); }

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  int degree_in(Variable v) const;  // -1 for the zero polynomial
  // Sum of the terms whose v-exponent is exactly k, with v removed.
  Polynomial coefficient(Variable v, int k) const;
  std::vector<Variable> variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned exponent) const;

  void add_term(const Monomial& m, const Integer& coefficient);

private:
  Terms terms_;
};

// q with q * den == num; throws NotDivisible otherwise (or when den is zero).
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// Replaces every variable by its image; throws MissingAssignment when a
// variable occurring in p has none.
Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& assignment);

// Canonical rendering: terms in descending grlex order.  Letters styles name
// level k by the k-th Latin letter (levels beyond 25 fall back to xK_M).
std::string to_string(const Polynomial& p, Style style = Style::Ascii);

// Accepts the canonical ascii and letters forms plus parentheses, so
// "(a1-b2)*(b2-c1)" parses.  Throws ParseError with a byte offset.
Polynomial parse_polynomial(std::string_view text);

}  // namespace qcalc

#endif  // QCALC_POLY_HPP
