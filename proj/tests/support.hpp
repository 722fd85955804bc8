#ifndef QCALC_TESTS_SUPPORT_HPP
#define QCALC_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace support {

// Rank array from dims and the off-diagonal entries {i, j, r_ij}.
inline qcalc::RankArray orbit(std::vector<int> dims, std::initializer_list<std::tuple<int, int, long>> entries) {
  qcalc::Dims d(std::move(dims));
  qcalc::RankArray r(d);
  for (int i = 0; i <= d.n(); ++i) r.at(i, i) = d[i];
  for (auto [i, j, v] : entries) r.at(i, j) = v;
  qcalc::validate(r);
  return r;
}

inline qcalc::Polynomial P(const std::string& text) { return qcalc::parse_polynomial(text); }

// The orbits that appear as worked examples.
inline qcalc::RankArray lace_example() {
  return orbit({4, 3, 3, 2}, {{0, 1, 2}, {0, 2, 1}, {0, 3, 0}, {1, 2, 2}, {1, 3, 0}, {2, 3, 1}});
}
inline qcalc::RankArray oldpd_example() {
  return orbit({1, 3, 3, 1}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 0}, {1, 2, 2}, {1, 3, 1}, {2, 3, 1}});
}
inline qcalc::RankArray final_example() { return orbit({2, 2, 1}, {{0, 1, 1}, {0, 2, 0}, {1, 2, 1}}); }
inline qcalc::RankArray a3_example() { return qcalc::hom_rank_array(qcalc::Dims({1, 2, 1})); }

inline const char* oldpd_class() { return "((a1-b3)+(b3-c3)+(c3-d1))*((b1-c3)+(b2-c2)+(b3-c1))"; }
inline const char* final_class() { return "(a1-b2)*(a2-b2) + (a2-b1)*(b2-c1) + (a1-b2)*(b2-c1)"; }
inline const char* a3_class() {
  return "h^4 + h^2*(a1-b2)*(b2-c1) + h^2*(a1-b1)*(b1-c1) + h^3*(a1-b1) + h^3*(b1-c1)";
}

}  // namespace support

#endif  // QCALC_TESTS_SUPPORT_HPP
