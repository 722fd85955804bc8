#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "qcalc/error.hpp"
#include "qcalc/pipedream.hpp"
#include "support.hpp"

using namespace qcalc;
using support::orbit;
using support::P;

namespace {

std::vector<Cell> full_cells(int d) {
  std::vector<Cell> out;
  for (int q = 1; q <= d; ++q)
    for (int p = 1; q + p <= d; ++p) out.push_back({q, p});
  return out;
}

PipeDream dream_of(const Dims& dims, const std::set<std::pair<int, int>>& crosses) {
  PipeDream d{dims, {}};
  for (auto [q, p] : crosses) d.crosses.push_back({q, p});
  return d;
}

std::vector<int> reading_letters(const std::set<std::pair<int, int>>& crosses, int d) {
  std::vector<int> out;
  for (int q = d; q >= 1; --q)
    for (int p = 1; p <= d; ++p)
      if (crosses.count({q, p})) out.push_back(q + p - 1);
  return out;
}

}  // namespace

TEST_CASE("tracing") {
  Dims dims({1, 2, 1});
  CHECK(trace(PipeDream{dims, {}}) == Permutation::identity(4));
  CHECK(to_string(trace(PipeDream{dims, {{1, 1}, {1, 3}, {3, 1}}})) == "2134");
  PipeDream all{dims, regions(dims).strict_cells};
  CHECK(to_string(trace(all)) == "4231");
  CHECK(int(all.crosses.size()) == trace(all).length());
}

TEST_CASE("reading-order composite equals the traced permutation") {
  for (int d = 1; d <= 5; ++d) {
    Dims dims({d});
    for (const auto& dr : oracle::all_dreams(d, full_cells(d))) {
      PipeDream pd = dream_of(dims, dr.crosses);
      CHECK(trace(pd).one_line() == dr.w);
      CHECK(composite(reading_letters(dr.crosses, d), d).one_line() == dr.w);
    }
  }
}

TEST_CASE("reading cells") {
  Dims dims({1, 2, 1});
  std::vector<Cell> strict = reading_cells(dims, Region::Strict);
  CHECK(strict == std::vector<Cell>{{3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(reading_cells(dims, Region::Full).size() == 6);
}

TEST_CASE("enumeration against all subsets") {
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({2, 2, 1}), Dims({1, 1, 1, 1}), Dims({2, 3})}) {
    int d = dims.d();
    for (Region region : {Region::Strict, Region::Full}) {
      auto cells = reading_cells(dims, region);
      auto dreams = oracle::all_dreams(d, cells);
      for (const auto& w : oracle::all_perms(d)) {
        Permutation v(w);
        for (Mode mode : {Mode::Reduced, Mode::All}) {
          std::set<std::set<std::pair<int, int>>> want, got;
          for (const auto& dr : dreams)
            if (dr.w == w && (mode == Mode::All || int(dr.crosses.size()) == v.length())) want.insert(dr.crosses);
          for (const auto& pd : enumerate(dims, v, region, mode)) {
            std::set<std::pair<int, int>> s;
            for (Cell c : pd.crosses) s.insert({c.q, c.p});
            got.insert(s);
            if (mode == Mode::Reduced) CHECK(int(pd.crosses.size()) == trace(pd).length());
          }
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("strict dreams are full dreams") {
  Dims dims({2, 2, 1});
  for (const auto& w : oracle::all_perms(5)) {
    Permutation v(w);
    auto full = enumerate(dims, v, Region::Full, Mode::All);
    for (const auto& pd : enumerate(dims, v, Region::Strict, Mode::All))
      CHECK(std::find(full.begin(), full.end(), pd) != full.end());
  }
}

TEST_CASE("the four-vertex example dream counts") {
  RankArray r = support::oldpd_example();
  Permutation z = zelevinsky_permutation(r);
  CHECK(enumerate(r.dims(), z, Region::Full, Mode::Reduced).size() == 21);
  auto star = enumerate(r.dims(), z, Region::Strict, Mode::Reduced);
  CHECK(star.size() == 9);
  bool seen = false;
  for (const auto& pd : star) seen = seen || weight(pd, Flavor::Chern) == P("(a1-b3)*(b2-c2)");
  CHECK(seen);
}

TEST_CASE("non-reduced strict dreams of the a3 example") {
  Dims dims({1, 2, 1});
  std::map<std::string, int> want = {{"2134", 2}, {"2314", 1}, {"3124", 1}, {"3214", 1}}, got;
  for (const auto& v : perm_set(support::a3_example()))
    got[to_string(v)] = int(enumerate(dims, v, Region::Strict, Mode::All).size());
  CHECK(got == want);
}

TEST_CASE("identity has only the empty dream on a single arrow") {
  auto ds = enumerate(Dims({1, 1}), Permutation::identity(2), Region::Strict, Mode::All);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].crosses.empty());
}

TEST_CASE("weights") {
  Dims dims({1, 2, 1});
  CHECK(weight(PipeDream{dims, {{1, 1}}}, Flavor::Csm) == P("h^4"));
  CHECK(weight(PipeDream{dims, {{1, 1}, {1, 3}, {3, 1}}}, Flavor::Csm) == P("h^2*(a1-b2)*(b2-c1)"));
  CHECK(weight(PipeDream{dims, {{1, 1}, {1, 3}, {3, 1}}}, Flavor::Chern) == P("(a1-b2)*(b2-c1)"));
  CHECK_THROWS_AS(weight(PipeDream{dims, {{2, 2}}}, Flavor::Chern), RegionViolation);
  BlockStructure blocks(dims);
  CHECK(cell_label(blocks, {1, 1}) == P("a1-c1"));
  CHECK(cell_label(blocks, {2, 1}) == P("b1-c1"));
}

TEST_CASE("hbar exponents stay in range") {
  Dims dims({2, 2, 1});
  int L = regions(dims).L;
  for (const auto& r : enumerate_rank_arrays(dims))
    for (const auto& v : perm_set(r))
      for (const auto& pd : enumerate(dims, v, Region::Strict, Mode::All)) {
        int e = weight(pd, Flavor::Csm).degree_in(Variable::hbar());
        CHECK(e >= 0);
        CHECK(e <= L);
        CHECK(e == L - int(pd.crosses.size()));
      }
}

TEST_CASE("P(v) dreams contain D_Hom") {
  std::vector<Dims> all;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 6; ++b) {
      all.push_back(Dims({a, b}));
      for (int c = 1; a + b + c <= 6; ++c) {
        all.push_back(Dims({a, b, c}));
        for (int e = 1; a + b + c + e <= 6; ++e) all.push_back(Dims({a, b, c, e}));
      }
    }
  for (const Dims& dims : all) {
    auto dhom = regions(dims).dhom_cells;
    for (const auto& r : enumerate_rank_arrays(dims))
      for (const auto& v : perm_set(r))
        for (const auto& pd : enumerate(dims, v, Region::Strict, Mode::All))
          for (Cell c : dhom) CHECK(pd.has_cross(c.q, c.p));
  }
}

TEST_CASE("quiver polynomials from pipe dreams") {
  CHECK(quiver_poly_pd(support::oldpd_example()) == P(support::oldpd_class()));
  CHECK(quiver_poly_pd(support::final_example()) == P(support::final_class()));
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({3, 3, 2}), Dims({2, 1, 2, 1})})
    CHECK(quiver_poly_pd(hom_rank_array(dims)) == Polynomial(1L));
}

TEST_CASE("csm classes from pipe dreams") {
  long count = 0;
  CHECK(csm_pd(support::a3_example(), Region::Strict, &count) == P(support::a3_class()));
  CHECK(count == 5);
  CHECK(csm_pd(orbit({1, 1}, {{0, 1, 1}})) == P("h"));
  CHECK(csm_pd(orbit({1, 1}, {{0, 1, 0}})) == P("a1-b1"));
}

TEST_CASE("leading hbar coefficient of csm is the quiver polynomial") {
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({2, 2, 1}), Dims({1, 1, 1, 1})})
    for (const auto& r : enumerate_rank_arrays(dims)) {
      Polynomial c = csm_pd(r);
      int top = regions(dims).L - zelevinsky_permutation(r).length();
      CHECK(c.degree_in(Variable::hbar()) == top);
      CHECK(c.coefficient(Variable::hbar(), top) == quiver_poly_pd(r));
    }
}
