#include "qcalc/io.hpp"

#include <algorithm>
#include <cctype>

#include "qcalc/error.hpp"

namespace qcalc {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
}

namespace {

long as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return v.get<long>();
}

std::pair<int, int> parse_key(const std::string& key) {
  std::size_t comma = key.find(',');
  auto bad = [&] { return InvalidInput("bad index key \"" + key + "\" (expected \"i,j\")"); };
  if (comma == std::string::npos) throw bad();
  auto field = [&](std::string s) {
    std::size_t a = s.find_first_not_of(' '), b = s.find_last_not_of(' ');
    if (a == std::string::npos) throw bad();
    s = s.substr(a, b - a + 1);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    return std::stoi(s);
  };
  return {field(key.substr(0, comma)), field(key.substr(comma + 1))};
}

std::string key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

Json triangular_json(const TriangularArray& a, bool off_diagonal_only) {
  Json out = Json::object();
  int n = a.dims().n();
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (!off_diagonal_only || i < j) out[key(i, j)] = a.at(i, j);
  return out;
}

Json dims_json(const Dims& dims) { return Json(dims.values()); }

void check_range(const Dims& dims, int i, int j, const char* what) {
  if (i < 0 || j < i || j > dims.n())
    throw InvalidInput(std::string(what) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is outside 0 <= i <= j <= " + std::to_string(dims.n()));
}

}  // namespace

Dims dims_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims")) throw InvalidInput("input needs a \"dims\" array");
  const Json& d = j["dims"];
  if (!d.is_array() || d.empty()) throw InvalidInput("\"dims\" must be a non-empty array");
  std::vector<int> r;
  for (const auto& v : d) r.push_back(int(as_int(v, "dims entry")));
  return Dims(std::move(r));
}

bool has_orbit(const Json& j) { return j.is_object() && (j.contains("rank") || j.contains("lace")); }

RankArray orbit_from_json(const Json& j) {
  Dims dims = dims_from_json(j);
  int n = dims.n();
  bool rank = j.contains("rank"), lace = j.contains("lace");
  if (!rank && !lace) throw InvalidInput("input needs a \"rank\" or \"lace\" table");
  for (const char* k : {"rank", "lace"})
    if (j.contains(k) && !j[k].is_object()) throw InvalidInput("rank/lace table must be an object of \"i,j\" keys");
  if (rank && lace) {
    // emitted reports carry both tables; they must describe the same orbit
    Json only_rank = {{"dims", j["dims"]}, {"rank", j["rank"]}};
    Json only_lace = {{"dims", j["dims"]}, {"lace", j["lace"]}};
    RankArray r = orbit_from_json(only_rank);
    if (!(orbit_from_json(only_lace) == r)) throw InvalidInput("\"rank\" and \"lace\" tables disagree");
    return r;
  }
  const Json& table = rank ? j["rank"] : j["lace"];
  if (rank) {
    RankArray r(dims);
    std::vector<std::vector<char>> seen(n + 1, std::vector<char>(n + 1, 0));
    for (int i = 0; i <= n; ++i) r.at(i, i) = dims[i];
    for (const auto& [k, v] : table.items()) {
      auto [a, b] = parse_key(k);
      check_range(dims, a, b, "rank");
      r.at(a, b) = as_int(v, "rank entry (" + key(a, b) + ")");
      seen[a][b] = 1;
    }
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (!seen[a][b]) throw InvalidInput("missing rank entry (" + key(a, b) + ")");
    validate(r);
    return r;
  }
  LaceArray s(dims);
  for (const auto& [k, v] : table.items()) {
    auto [a, b] = parse_key(k);
    check_range(dims, a, b, "lace");
    s.at(a, b) = as_int(v, "lace entry (" + key(a, b) + ")");
  }
  RankArray r = rank_array(s);
  validate(r);
  return r;
}

Json lace_json(const LaceArray& s) {
  Json out;
  out["dims"] = dims_json(s.dims());
  out["lace"] = triangular_json(s, false);
  return out;
}

Json to_json(const RankArray& r) {
  Json out;
  out["dims"] = dims_json(r.dims());
  out["rank"] = triangular_json(r, true);
  out["lace"] = triangular_json(lace_array(r), false);
  return out;
}

PipeDream pipedream_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("pipe dream must be a JSON object");
  Dims dims;
  if (j.contains("dims")) {
    dims = dims_from_json(j);
    if (j.contains("d") && as_int(j["d"], "d") != dims.d()) throw InvalidInput("\"d\" disagrees with \"dims\"");
  } else if (j.contains("d")) {
    dims = Dims({int(as_int(j["d"], "d"))});
  } else {
    throw InvalidInput("pipe dream needs \"dims\" or \"d\"");
  }
  PipeDream dream{dims, {}};
  if (!j.contains("crosses") || !j["crosses"].is_array()) throw InvalidInput("pipe dream needs a \"crosses\" array");
  for (const auto& c : j["crosses"]) {
    if (!c.is_array() || c.size() != 2) throw InvalidInput("each cross is a [q, p] pair");
    Cell cell{int(as_int(c[0], "cross row")), int(as_int(c[1], "cross column"))};
    if (cell.q < 1 || cell.p < 1 || cell.q + cell.p > dims.d())
      throw InvalidInput("cross (" + key(cell.q, cell.p) + ") must satisfy q + p <= d");
    dream.crosses.push_back(cell);
  }
  std::sort(dream.crosses.begin(), dream.crosses.end());
  dream.crosses.erase(std::unique(dream.crosses.begin(), dream.crosses.end()), dream.crosses.end());
  return dream;
}

Json to_json(const PipeDream& dream) {
  Json out;
  out["dims"] = dims_json(dream.dims);
  out["d"] = dream.dims.d();
  Json crosses = Json::array();
  for (const Cell& c : dream.crosses) crosses.push_back({c.q, c.p});
  out["crosses"] = crosses;
  return out;
}

Cgpd cgpd_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rects") || !j["rects"].is_array())
    throw InvalidInput("CGPD needs a \"rects\" array");
  const Json& rects = j["rects"];
  Cgpd out;
  for (const auto& rect : rects) {
    if (!rect.is_array() || rect.empty()) throw InvalidInput("each rectangle is a non-empty array of rows");
    Cgpd::Grid grid;
    for (const auto& row : rect) {
      if (!row.is_array()) throw InvalidInput("each rectangle row is an array of tile codes");
      std::vector<Tile> tiles;
      for (const auto& code : row) {
        if (!code.is_string() || code.get<std::string>().size() != 1)
          throw InvalidInput("tile codes are one-character strings");
        tiles.push_back(tile_from_code(code.get<std::string>()[0]));
      }
      grid.push_back(std::move(tiles));
    }
    out.rects.push_back(std::move(grid));
  }
  if (j.contains("dims")) {
    out.dims = dims_from_json(j);
  } else {
    if (out.rects.empty()) throw InvalidInput("CGPD without rectangles needs \"dims\"");
    std::vector<int> r;
    for (const auto& grid : out.rects) r.push_back(int(grid.size()));
    r.push_back(int(out.rects.back().front().size()));
    out.dims = Dims(std::move(r));
  }
  return out;
}

Json to_json(const Cgpd& cgpd) {
  Json out;
  out["dims"] = dims_json(cgpd.dims);
  Json rects = Json::array();
  for (const auto& grid : cgpd.rects) {
    Json g = Json::array();
    for (const auto& row : grid) {
      Json codes = Json::array();
      for (Tile t : row) codes.push_back(std::string(1, tile_code(t)));
      g.push_back(codes);
    }
    rects.push_back(g);
  }
  out["rects"] = rects;
  return out;
}

Rep rep_from_json(const Json& j) {
  Dims dims = dims_from_json(j);
  if (!j.contains("phi") || !j["phi"].is_array() || int(j["phi"].size()) != dims.n())
    throw InvalidInput("\"phi\" must list n matrices");
  Rep rep{dims, {}};
  for (int k = 1; k <= dims.n(); ++k) {
    const Json& m = j["phi"][k - 1];
    if (!m.is_array() || int(m.size()) != dims[k])
      throw InvalidInput("phi_" + std::to_string(k) + " must have " + std::to_string(dims[k]) + " rows");
    IntMatrix phi(dims[k], dims[k - 1]);
    for (int a = 0; a < dims[k]; ++a) {
      if (!m[a].is_array() || int(m[a].size()) != dims[k - 1])
        throw InvalidInput("phi_" + std::to_string(k) + " must have " + std::to_string(dims[k - 1]) + " columns");
      for (int b = 0; b < dims[k - 1]; ++b) phi(a, b) = Integer(as_int(m[a][b], "matrix entry"));
    }
    rep.phi.push_back(std::move(phi));
  }
  return rep;
}

Json to_json(const Permutation& v) { return Json(v.one_line()); }

Json to_json(const ConsistencyReport& rep, Style style, bool timings) {
  Json out = to_json(rep.r);
  out["z"] = rep.z;
  out["length_z"] = rep.length_z;
  out["L"] = rep.L;
  out["dhom"] = rep.dhom;
  Json methods = Json::array();
  for (const auto& res : rep.results) {
    Json m;
    m["target"] = name(res.target);
    m["method"] = name(res.method);
    m["ok"] = res.ok;
    if (res.ok)
      m["value"] = to_string(res.value, style);
    else
      m["error"] = res.error;
    if (timings) m["ms"] = res.millis;
    methods.push_back(m);
  }
  out["methods"] = methods;
  out["checks"] = {{"qpoly_agree", rep.qpoly_agree},
                   {"csm_agree", rep.csm_agree},
                   {"degree_law", rep.degree_law},
                   {"leading_term_law", rep.leading_term_law},
                   {"dhom_containment", rep.dhom_containment}};
  out["counts"] = {{"perm", rep.counts.perm},
                   {"rp_star", rep.counts.rp_star},
                   {"p_total", rep.counts.p_total},
                   {"cgpd", rep.counts.cgpd},
                   {"cgpd_min", rep.counts.cgpd_min}};
  out["ok"] = rep.ok();
  return out;
}

Json to_json(const SweepReport& sweep, Style style, bool timings) {
  Json out;
  out["budget"] = sweep.budget;
  out["orbits"] = sweep.reports.size();
  out["ok"] = sweep.ok();
  Json reports = Json::array();
  for (const auto& r : sweep.reports) reports.push_back(to_json(r, style, timings));
  out["reports"] = reports;
  return out;
}

}  // namespace qcalc
