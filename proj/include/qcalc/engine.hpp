#ifndef QCALC_ENGINE_HPP
#define QCALC_ENGINE_HPP

#include <array>
#include <string>
#include <vector>

#include "qcalc/poly.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

enum class Target { Qpoly, Csm };
enum class Method { Pd, Cgpd, Ratio };

const char* name(Target t);
const char* name(Method m);
Target parse_target(const std::string& s);  // throws InvalidInput
Method parse_method(const std::string& s);

Polynomial compute(const RankArray& r, Target target, Method method);

struct MethodResult {
  Target target;
  Method method;
  bool ok = false;       // false when the formula threw
  std::string error;     // the exception message in that case
  Polynomial value;
  double millis = 0;
};

struct Counts {
  long perm = 0;       // |perm(r)|
  long rp_star = 0;    // |RP*(z(r))|
  long p_total = 0;    // sum over perm(r) of |P(v)|
  long cgpd = 0;
  long cgpd_min = 0;   // |CGPD_inf|
};

struct ConsistencyReport {
  RankArray r;
  std::string z;                    // one-line z(r)
  int length_z = 0, L = 0, dhom = 0;
  std::vector<MethodResult> results;  // qpoly pd/cgpd/ratio, then csm pd/cgpd/ratio
  bool qpoly_agree = false;
  bool csm_agree = false;
  bool degree_law = false;          // deg qpoly = l(z) - |D_Hom|, homogeneous
  bool leading_term_law = false;    // top h power is h^(L - l(z)) with coefficient qpoly
  bool dhom_containment = false;    // csm_pd raised no DHomViolation
  Counts counts;

  bool ok() const { return qpoly_agree && csm_agree && degree_law && leading_term_law && dhom_containment; }
  const MethodResult& result(Target t, Method m) const;
};

ConsistencyReport check(const RankArray& r);

// Every dims with n >= 1 and hom_dim <= budget, by (n, r) lexicographically.
std::vector<Dims> dims_within(long budget);

struct SweepReport {
  long budget = 0;
  std::vector<ConsistencyReport> reports;
  bool ok() const;
};

// threads <= 0 reads QCALC_THREADS, falling back to every core.
SweepReport sweep(long budget, int threads = 0);
int thread_count(int requested);

}  // namespace qcalc

#endif  // QCALC_ENGINE_HPP
