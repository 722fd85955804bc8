#include "qcalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, int exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (e < 0) throw InvalidInput("negative exponent in monomial");
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
    degree_ += e;
  }
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto b = other.factors_.begin(), be = other.factors_.end();
  for (const auto& [v, e] : factors_) {
    while (b != be && b->first < v) ++b;
    if (b == be || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial operator/(const Monomial& num, const Monomial& den) {
  Monomial out;
  auto b = den.factors_.begin(), be = den.factors_.end();
  for (const auto& [v, e] : num.factors_) {
    int rest = e;
    if (b != be && b->first == v) {
      rest -= b->second;
      ++b;
    }
    if (rest > 0) out.factors_.emplace_back(v, rest);
  }
  out.degree_ = num.degree_ - den.degree_;
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first)
      // the one holding the earlier variable has the larger exponent there
      return fa[i].first < fb[i].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (i < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), Integer(1)); }

Polynomial::Polynomial(const Monomial& m, const Integer& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

void Polynomial::add_term(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(Variable v) const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.exponent(v));
  return best;
}

Polynomial Polynomial::coefficient(Variable v, int k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == k) out.add_term(m.without(v), c);
  return out;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1L), base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw NotDivisible();
  Polynomial rest = num, quotient;
  const auto& [lm, lc] = den.leading_term();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!lm.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) throw NotDivisible();
    Monomial qm = m / lm;
    Integer qc = c / lc;
    for (const auto& [dm, dc] : den.terms()) rest.add_term(qm * dm, -qc * dc);
    quotient.add_term(qm, qc);
  }
  return quotient;
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& assignment) {
  std::map<std::pair<Variable, int>, Polynomial> powers;
  auto power_of = [&](Variable v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = assignment.find(v);
    if (img == assignment.end()) throw MissingAssignment(to_string(v));
    return powers.emplace(key, img->second.pow(static_cast<unsigned>(e))).first->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& [v, e] : m.factors()) term *= power_of(v, e);
    out += term;
  }
  return out;
}

// -------------------------------------------------------------- formatting

namespace {

bool letters_ok(const Variable& v) { return v.level >= 0 && v.level <= 25; }

std::string factor_string(const Variable& v, int e, Style style) {
  std::string s;
  bool latex = style == Style::Latex || style == Style::LatexLetters;
  bool letters = style == Style::Letters || style == Style::LatexLetters;
  if (v.is_hbar()) {
    s = latex ? "\\hbar" : "h";
  } else if (letters && letters_ok(v)) {
    char name = static_cast<char>('a' + v.level);
    s = latex ? std::string(1, name) + "_{" + std::to_string(v.index) + "}"
              : std::string(1, name) + std::to_string(v.index);
  } else if (latex) {
    s = "x^{" + std::to_string(v.level) + "}_{" + std::to_string(v.index) + "}";
  } else {
    s = "x" + std::to_string(v.level) + "_" + std::to_string(v.index);
  }
  if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(Variable v, Style style) { return factor_string(v, 1, style); }

std::string to_string(const Polynomial& p, Style style) {
  if (p.is_zero()) return "0";
  bool latex = style == Style::Latex || style == Style::LatexLetters;
  const char* join = latex ? " " : "*";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    Integer mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string body;
    if (mag != 1 || m.is_one()) body = mag.get_str();
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += join;
      body += factor_string(v, e, style);
    }
    out += body;
  }
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty input");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::islower(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = term();
      if (c == '+')
        acc += next;
      else
        acc -= next;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      unsigned long e = number(at);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long number(std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(at, "expected a number");
    if (pos_ - start > 9) throw ParseError(at, "number too large");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      bool has_digits = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
      if (!has_digits) {
        if (c == 'h') return Polynomial::hbar();
        throw ParseError(at, std::string("variable '") + c + "' needs an index");
      }
      int first = static_cast<int>(number(at));
      if (c == 'x' && pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        int index = static_cast<int>(number(pos_));
        if (index < 1) throw ParseError(at, "index must be positive");
        return Polynomial::x(first, index);
      }
      if (first < 1) throw ParseError(at, "index must be positive");
      return Polynomial::x(c - 'a', first);
    }
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace qcalc
