#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qcalc/cgpd.hpp"
#include "qcalc/error.hpp"
#include "qcalc/io.hpp"
#include "qcalc/pipedream.hpp"
#include "support.hpp"

using namespace qcalc;
using support::orbit;
using support::P;

namespace {

Json load(const std::string& name) {
  std::ifstream f(std::string(QCALC_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_json(ss.str());
}

std::multiset<std::pair<int, int>> intervals(const std::vector<PipePath>& paths) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& p : paths) out.insert({p.start, p.end});
  return out;
}

std::multiset<std::pair<int, int>> laces_of(const RankArray& r) {
  auto l = lace_array(r).laces();
  return {l.begin(), l.end()};
}

Cgpd single(const Dims& dims, Tile t) { return Cgpd{dims, {{{t}}}}; }

std::vector<Dims> brute_dims() {
  return {Dims({1, 1}),    Dims({1, 2}),    Dims({2, 1}),    Dims({2, 2}),    Dims({1, 3}),
          Dims({2, 3}),    Dims({1, 1, 1}), Dims({1, 2, 1}), Dims({2, 1, 2}), Dims({2, 2, 1}),
          Dims({1, 2, 2}), Dims({1, 1, 1, 1}), Dims({1, 1, 2, 1})};
}

}  // namespace

TEST_CASE("tile codes") {
  for (Tile t : {Tile::Blank, Tile::H, Tile::V, Tile::Cross, Tile::ElbowSE, Tile::ElbowNW, Tile::Bump})
    CHECK(tile_from_code(tile_code(t)) == t);
  CHECK(tile_from_code('h') == Tile::H);
  CHECK(tile_from_code('v') == Tile::V);
  CHECK_THROWS_AS(tile_from_code('x'), InvalidInput);
}

TEST_CASE("forced diagrams on a single arrow") {
  RankArray full = orbit({1, 1}, {{0, 1, 1}});
  auto paths = validate(single(full.dims(), Tile::ElbowSE), full);
  CHECK(intervals(paths) == std::multiset<std::pair<int, int>>{{0, 1}});
  RankArray zero = orbit({1, 1}, {{0, 1, 0}});
  auto zpaths = validate(single(zero.dims(), Tile::H), zero);
  CHECK(intervals(zpaths) == std::multiset<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(enumerate_cgpd(full).size() == 1);
  CHECK(enumerate_cgpd(zero).size() == 1);
  CHECK(cgpd_weight(single(zero.dims(), Tile::H)) == P("a1-b1"));
  CHECK(csm_cgpd(full) == P("h"));
  CHECK(csm_cgpd(zero) == P("a1-b1"));
  CHECK(quiver_poly_cgpd(zero) == P("a1-b1"));
}

TEST_CASE("validation failures") {
  RankArray full = orbit({1, 1}, {{0, 1, 1}});
  CHECK_THROWS_AS(validate(single(full.dims(), Tile::H), full), LaceCountMismatch);
  CHECK_THROWS_AS(validate(single(full.dims(), Tile::V), full), InvalidCgpd);
  CHECK_THROWS_AS(validate(single(full.dims(), Tile::ElbowNW), full), InvalidCgpd);
  CHECK_THROWS_AS(validate(Cgpd{full.dims(), {}}, full), InvalidCgpd);
}

TEST_CASE("the six-vertex displayed diagram validates") {
  Json j = load("cgpd_big.json");
  RankArray r = orbit_from_json(j);
  Cgpd c = cgpd_from_json(j);
  auto paths = validate(c, r);
  CHECK(intervals(paths) == laces_of(r));
  CHECK(to_json(cgpd_from_json(to_json(c))) == to_json(c));
}

TEST_CASE("three diagrams for the a3 example") {
  RankArray r = support::a3_example();
  auto all = enumerate_cgpd(r);
  REQUIRE(all.size() == 3);
  std::multiset<std::string> got, want;
  for (const auto& c : all) got.insert(to_string(cgpd_weight(c)));
  for (const char* w : {"h^2*(a1-b2)*(b2-c1)", "h^2*(a1-b1+h)*(b1-c1)", "h^3*(a1-b1+h)"})
    want.insert(to_string(P(w)));
  CHECK(got == want);
  long count = 0;
  CHECK(csm_cgpd(r, &count) == P(support::a3_class()));
  CHECK(count == 3);
}

TEST_CASE("minimal diagrams for the final example") {
  long total = 0, minimal = 0;
  CHECK(quiver_poly_cgpd(support::final_example(), &total, &minimal) == P(support::final_class()));
  CHECK(minimal == 3);
  CHECK(total >= minimal);
}

TEST_CASE("enumeration matches brute force over all tile grids") {
  for (const Dims& dims : brute_dims())
    for (const auto& r : enumerate_rank_arrays(dims)) {
      auto want = oracle::cgpd_brute(r);
      auto got = enumerate_cgpd(r);
      std::sort(want.begin(), want.end(), [](const Cgpd& a, const Cgpd& b) { return codes(a) < codes(b); });
      CHECK(got == want);
    }
}

TEST_CASE("path laws") {
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({2, 2, 1}), Dims({2, 1, 2}), Dims({1, 2, 2, 1})})
    for (const auto& r : enumerate_rank_arrays(dims)) {
      Permutation z = zelevinsky_permutation(r);
      int degree = z.length() - int(regions(dims).dhom_cells.size());
      long total = 0, minimal = 0;
      Polynomial q = quiver_poly_cgpd(r, &total, &minimal);
      CHECK(q.total_degree() == degree);
      int fewest = 1 << 30;
      for (const auto& c : enumerate_cgpd(r)) {
        auto paths = validate(c, r);
        CHECK(intervals(paths) == laces_of(r));
        std::map<std::tuple<int, int, int>, std::vector<int>> ends;
        for (const auto& p : paths) {
          for (std::size_t k = 0; k < p.cells.size(); ++k) {
            const PathStep& s = p.cells[k];
            ends[{s.rect, s.row, s.col}].push_back(p.end);
            if (k > 0 && p.cells[k - 1].rect == s.rect) {
              CHECK(s.col <= p.cells[k - 1].col);
              CHECK(s.row >= p.cells[k - 1].row);
            }
          }
        }
        for (const auto& [cell, colors] : ends) {
          auto [rect, row, col] = cell;
          if (c.rects[rect][row - 1][col - 1] != Tile::Cross) continue;
          REQUIRE(colors.size() == 2);
          CHECK(colors[0] != colors[1]);
        }
        fewest = std::min(fewest, crossing_count(c));
      }
      CHECK(fewest == degree);
    }
}

TEST_CASE("hom orbits have class one") {
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({3, 3, 2}), Dims({2, 1, 2, 1})})
    CHECK(quiver_poly_cgpd(hom_rank_array(dims)) == Polynomial(1L));
}

TEST_CASE("cgpd and pipe dream formulas agree on small dims") {
  for (const Dims& dims : {Dims({1, 2, 1}), Dims({2, 2, 1}), Dims({1, 3, 1}), Dims({1, 1, 1, 1})})
    for (const auto& r : enumerate_rank_arrays(dims)) {
      CHECK(csm_cgpd(r) == csm_pd(r));
      CHECK(quiver_poly_cgpd(r) == quiver_poly_pd(r));
    }
}
