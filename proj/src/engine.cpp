#include "qcalc/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "qcalc/blockperm.hpp"
#include "qcalc/cgpd.hpp"
#include "qcalc/error.hpp"
#include "qcalc/localization.hpp"
#include "qcalc/pipedream.hpp"

namespace qcalc {

const char* name(Target t) { return t == Target::Qpoly ? "qpoly" : "csm"; }

const char* name(Method m) {
  switch (m) {
    case Method::Pd: return "pd";
    case Method::Cgpd: return "cgpd";
    case Method::Ratio: return "ratio";
  }
  return "?";
}

Target parse_target(const std::string& s) {
  if (s == "qpoly") return Target::Qpoly;
  if (s == "csm") return Target::Csm;
  throw InvalidInput("unknown target '" + s + "'");
}

Method parse_method(const std::string& s) {
  if (s == "pd") return Method::Pd;
  if (s == "cgpd") return Method::Cgpd;
  if (s == "ratio") return Method::Ratio;
  throw InvalidInput("unknown method '" + s + "' (expected pd, cgpd or ratio)");
}

Polynomial compute(const RankArray& r, Target target, Method method) {
  if (target == Target::Qpoly) {
    switch (method) {
      case Method::Pd: return quiver_poly_pd(r);
      case Method::Cgpd: return quiver_poly_cgpd(r);
      case Method::Ratio: return quiver_poly_ratio(r);
    }
  } else {
    switch (method) {
      case Method::Pd: return csm_pd(r);
      case Method::Cgpd: return csm_cgpd(r);
      case Method::Ratio: return csm_ratio(r);
    }
  }
  throw InvalidInput("unknown method");
}

const MethodResult& ConsistencyReport::result(Target t, Method m) const {
  for (const auto& res : results)
    if (res.target == t && res.method == m) return res;
  throw InvalidInput("no such result");
}

namespace {

template <class F>
MethodResult run(Target t, Method m, F&& f) {
  MethodResult res{t, m, false, {}, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    res.value = f();
    res.ok = true;
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

bool all_equal(const MethodResult& a, const MethodResult& b, const MethodResult& c) {
  return a.ok && b.ok && c.ok && a.value == b.value && b.value == c.value;
}

}  // namespace

ConsistencyReport check(const RankArray& r) {
  validate(r);
  ConsistencyReport rep;
  rep.r = r;
  const Dims& dims = r.dims();
  Permutation z = zelevinsky_permutation(r);
  Regions reg = regions(dims);
  rep.z = to_string(z);
  rep.length_z = z.length();
  rep.L = reg.L;
  rep.dhom = int(reg.dhom_cells.size());

  Counts& c = rep.counts;
  for_each_perm(r, [&](const Permutation&) { ++c.perm; });
  rep.results.push_back(run(Target::Qpoly, Method::Pd, [&] { return quiver_poly_pd(r, &c.rp_star); }));
  rep.results.push_back(run(Target::Qpoly, Method::Cgpd,
                            [&] { return quiver_poly_cgpd(r, &c.cgpd, &c.cgpd_min); }));
  rep.results.push_back(run(Target::Qpoly, Method::Ratio, [&] { return quiver_poly_ratio(r); }));
  bool dhom_violation = false;
  rep.results.push_back(run(Target::Csm, Method::Pd, [&] {
    try {
      return csm_pd(r, Region::Strict, &c.p_total);
    } catch (const DHomViolation&) {
      dhom_violation = true;
      throw;
    }
  }));
  rep.results.push_back(run(Target::Csm, Method::Cgpd, [&] { return csm_cgpd(r); }));
  rep.results.push_back(run(Target::Csm, Method::Ratio, [&] { return csm_ratio(r); }));

  const auto& q = rep.results;
  rep.qpoly_agree = all_equal(q[0], q[1], q[2]);
  rep.csm_agree = all_equal(q[3], q[4], q[5]);
  rep.dhom_containment = q[3].ok || !dhom_violation;

  const Polynomial& qpoly = q[0].value;
  rep.degree_law = q[0].ok && !qpoly.is_zero() && qpoly.is_homogeneous() &&
                   qpoly.total_degree() == rep.length_z - rep.dhom;
  int top = rep.L - rep.length_z;
  rep.leading_term_law = q[0].ok && q[3].ok && q[3].value.degree_in(Variable::hbar()) == top &&
                         q[3].value.coefficient(Variable::hbar(), top) == qpoly;
  return rep;
}

std::vector<Dims> dims_within(long budget) {
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  auto rec = [&](auto&& self, long used) -> void {
    if (cur.size() >= 2) found.push_back(cur);
    for (int next = 1;; ++next) {
      long add = cur.empty() ? 0 : long(cur.back()) * next;
      if (cur.empty() && next > budget) break;
      if (used + add > budget) break;
      cur.push_back(next);
      self(self, used + add);
      cur.pop_back();
    }
  };
  if (budget >= 1) rec(rec, 0);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Dims> out;
  for (auto& v : found) out.emplace_back(std::move(v));
  return out;
}

bool SweepReport::ok() const {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCALC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

SweepReport sweep(long budget, int threads) {
  SweepReport out;
  out.budget = budget;
  std::vector<RankArray> jobs;
  for (const Dims& dims : dims_within(budget))
    for (auto& r : enumerate_rank_arrays(dims)) jobs.push_back(std::move(r));
  out.reports.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        out.reports[k] = check(jobs[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int n = std::max(1, std::min<int>(thread_count(threads), int(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace qcalc
