#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qcalc/engine.hpp"
#include "qcalc/error.hpp"
#include "qcalc/io.hpp"
#include "support.hpp"

using namespace qcalc;
using support::orbit;
using support::P;

TEST_CASE("names and dispatch") {
  CHECK(parse_target("qpoly") == Target::Qpoly);
  CHECK(parse_method("ratio") == Method::Ratio);
  CHECK(std::string(name(Method::Cgpd)) == "cgpd");
  CHECK_THROWS_AS(parse_method("magic"), InvalidInput);
  CHECK_THROWS_AS(parse_target("motivic"), InvalidInput);
  CHECK(compute(support::oldpd_example(), Target::Qpoly, Method::Pd) == P(support::oldpd_class()));
  CHECK(compute(support::a3_example(), Target::Csm, Method::Cgpd) == P(support::a3_class()));
  CHECK(compute(orbit({1, 1}, {{0, 1, 0}}), Target::Qpoly, Method::Ratio) == P("a1-b1"));
}

TEST_CASE("check on the a3 example") {
  ConsistencyReport rep = check(support::a3_example());
  CHECK(rep.ok());
  CHECK(rep.results.size() == 6);
  CHECK(rep.z == "2134");
  CHECK(rep.counts.perm == 4);
  CHECK(rep.counts.p_total == 5);
  CHECK(rep.counts.cgpd == 3);
  CHECK(rep.result(Target::Csm, Method::Ratio).value == P(support::a3_class()));
}

TEST_CASE("check on the final example") {
  ConsistencyReport rep = check(support::final_example());
  CHECK(rep.ok());
  CHECK(rep.counts.rp_star == 3);
  CHECK(rep.counts.cgpd_min == 3);
}

TEST_CASE("check on a single arrow") {
  for (long k : {0L, 1L}) CHECK(check(orbit({1, 1}, {{0, 1, k}})).ok());
}

TEST_CASE("check is deterministic") {
  RankArray r = support::oldpd_example();
  std::string a = to_json(check(r), Style::Ascii, false).dump();
  std::string b = to_json(check(r), Style::Ascii, false).dump();
  CHECK(a == b);
}

TEST_CASE("dims within a budget") {
  auto all = dims_within(4);
  CHECK(std::find(all.begin(), all.end(), Dims({1, 2, 1})) != all.end());
  CHECK(std::find(all.begin(), all.end(), Dims({1, 1})) != all.end());
  for (const Dims& d : all) {
    CHECK(d.n() >= 1);
    CHECK(d.hom_dim() <= 4);
  }
  // brute force: sequences with every entry and the length bounded by the budget
  std::set<std::vector<int>> want;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() >= 2 && Dims(cur).hom_dim() <= 5) want.insert(cur);
    if (cur.size() == 6) return;
    for (int k = 1; k <= 5; ++k) {
      cur.push_back(k);
      if (cur.size() < 2 || Dims(cur).hom_dim() <= 5) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::set<std::vector<int>> got;
  for (const Dims& d : dims_within(5)) got.insert(d.values());
  CHECK(got == want);
}

TEST_CASE("sweeps") {
  SweepReport s4 = sweep(4, 1);
  CHECK(s4.ok());
  long a3 = 0, line = 0;
  for (const auto& rep : s4.reports) {
    a3 += rep.r.dims() == Dims({1, 2, 1});
    line += rep.r.dims() == Dims({1, 1});
  }
  CHECK(a3 == long(oracle::all_lace_tables(Dims({1, 2, 1})).size()));
  CHECK(a3 == 5);
  CHECK(line == 2);
  // (2,2,1) has dim Hom 6
  SweepReport s5 = sweep(6, 2);
  bool found = false;
  for (const auto& rep : s5.reports) found = found || rep.r == support::final_example();
  CHECK(found);
  // parallel runs merge into the same order
  SweepReport again = sweep(6, 1);
  REQUIRE(again.reports.size() == s5.reports.size());
  for (std::size_t k = 0; k < s5.reports.size(); ++k)
    CHECK(to_json(again.reports[k], Style::Ascii, false) == to_json(s5.reports[k], Style::Ascii, false));
}
