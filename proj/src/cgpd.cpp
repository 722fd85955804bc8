#include "qcalc/cgpd.hpp"

#include <algorithm>
#include <optional>

#include "qcalc/error.hpp"

namespace qcalc {

char tile_code(Tile t) {
  switch (t) {
    case Tile::Blank: return '.';
    case Tile::H: return '-';
    case Tile::V: return '|';
    case Tile::Cross: return '+';
    case Tile::ElbowSE: return 'r';
    case Tile::ElbowNW: return 'j';
    case Tile::Bump: return 'b';
  }
  return '?';
}

Tile tile_from_code(char code) {
  switch (code) {
    case '.': return Tile::Blank;
    case '-': case 'h': return Tile::H;
    case '|': case 'v': return Tile::V;
    case '+': return Tile::Cross;
    case 'r': return Tile::ElbowSE;
    case 'j': return Tile::ElbowNW;
    case 'b': return Tile::Bump;
    default: throw InvalidInput(std::string("unknown tile code '") + code + "'");
  }
}

namespace {

struct Arcs {
  bool north_in, east_in;
};

Arcs inputs(Tile t) {
  switch (t) {
    case Tile::Blank: return {false, false};
    case Tile::H: case Tile::ElbowSE: return {false, true};
    case Tile::V: case Tile::ElbowNW: return {true, false};
    case Tile::Cross: case Tile::Bump: return {true, true};
  }
  return {false, false};
}

using PipeId = std::optional<int>;

// West and south outputs for the given inputs.
std::pair<PipeId, PipeId> outputs(Tile t, PipeId north, PipeId east) {
  switch (t) {
    case Tile::Blank: return {std::nullopt, std::nullopt};
    case Tile::H: return {east, std::nullopt};
    case Tile::ElbowSE: return {std::nullopt, east};
    case Tile::V: return {std::nullopt, north};
    case Tile::ElbowNW: return {north, std::nullopt};
    case Tile::Cross: return {east, north};
    case Tile::Bump: return {north, east};
  }
  return {std::nullopt, std::nullopt};
}

std::string describe(bool n, bool e) {
  if (n && e) return "north and east";
  if (n) return "north only";
  if (e) return "east only";
  return "no strands";
}

struct TileUse {
  int rect, row, col;
  Tile tile;
  PipeId north, east;
};

struct Routing {
  std::vector<PipePath> paths;
  std::vector<TileUse> tiles;
};

Routing route(const Cgpd& cgpd) {
  const Dims& dims = cgpd.dims;
  int n = dims.n();
  if (int(cgpd.rects.size()) != n)
    throw InvalidCgpd("expected " + std::to_string(n) + " rectangles, got " +
                      std::to_string(cgpd.rects.size()));
  Routing out;
  auto fresh = [&](int rect, int row) {
    out.paths.push_back({rect, -1, row, {}});
    return int(out.paths.size()) - 1;
  };
  std::vector<int> rows;
  for (int j = 1; j <= dims[0]; ++j) rows.push_back(fresh(0, j));

  for (int i = 0; i < n; ++i) {
    int R = dims[i], C = dims[i + 1];
    const auto& grid = cgpd.rects[i];
    if (int(grid.size()) != R)
      throw InvalidCgpd("rectangle " + std::to_string(i) + " needs " + std::to_string(R) + " rows");
    std::vector<PipeId> north(C + 1);
    for (int j = 1; j <= R; ++j) {
      if (int(grid[j - 1].size()) != C)
        throw InvalidCgpd("rectangle " + std::to_string(i) + " row " + std::to_string(j) +
                          " needs " + std::to_string(C) + " tiles");
      PipeId east = rows[j - 1];
      for (int k = C; k >= 1; --k) {
        Tile t = grid[j - 1][k - 1];
        Arcs need = inputs(t);
        if (j == 1 && need.north_in) throw NorthLeak(i, k);
        if (need.north_in != north[k].has_value() || need.east_in != east.has_value())
          throw EdgeMismatch(i, j, k,
                             std::string("tile '") + tile_code(t) + "' needs " +
                                 describe(need.north_in, need.east_in) + ", has " +
                                 describe(north[k].has_value(), east.has_value()));
        out.tiles.push_back({i, j, k, t, north[k], east});
        if (north[k]) out.paths[*north[k]].cells.push_back({i, j, k});
        if (east) out.paths[*east].cells.push_back({i, j, k});
        auto [w, s] = outputs(t, north[k], east);
        north[k] = s;
        east = w;
      }
      if (east) out.paths[*east].end = i;
    }
    std::vector<int> next;
    for (int k = 1; k <= C; ++k) next.push_back(north[k] ? *north[k] : fresh(i + 1, k));
    rows = std::move(next);
  }
  for (int id : rows) out.paths[id].end = n;
  return out;
}

void check_colors(const Routing& routing) {
  for (const auto& use : routing.tiles)
    if (use.tile == Tile::Cross &&
        routing.paths[*use.north].end == routing.paths[*use.east].end)
      throw SameColorCross(use.rect, use.row, use.col);
}

void check_laces(const Routing& routing, const LaceArray& s) {
  int n = s.dims().n();
  LaceArray got(s.dims());
  for (const auto& path : routing.paths) ++got.at(path.start, path.end);
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      if (got.at(p, q) != s.at(p, q)) throw LaceCountMismatch(p, q, got.at(p, q), s.at(p, q));
}

Polynomial linear(int i, int j, int k) { return Polynomial::x(i, j) - Polynomial::x(i + 1, k); }

Polynomial weight_of(const Routing& routing) {
  Polynomial w(1L);
  for (const auto& use : routing.tiles) {
    Polynomial lin = linear(use.rect, use.row, use.col);
    switch (use.tile) {
      case Tile::Cross: case Tile::H: case Tile::V: w *= lin; break;
      case Tile::ElbowSE: case Tile::ElbowNW: w *= Polynomial::hbar(); break;
      case Tile::Blank: w *= lin + Polynomial::hbar(); break;
      case Tile::Bump:
        if (routing.paths[*use.north].end == routing.paths[*use.east].end)
          w *= lin + Polynomial::hbar();
        else
          w *= Polynomial::hbar();
        break;
    }
  }
  return w;
}

std::string flat_codes(const Cgpd& cgpd) {
  std::string out;
  for (const auto& grid : cgpd.rects)
    for (const auto& row : grid)
      for (Tile t : row) out += tile_code(t);
  return out;
}

}  // namespace

std::vector<PipePath> validate(const Cgpd& cgpd, const RankArray& r) {
  if (!(cgpd.dims == r.dims())) throw InvalidCgpd("CGPD dimension vector differs from the rank array's");
  Routing routing = route(cgpd);
  check_colors(routing);
  check_laces(routing, lace_array(r));
  return routing.paths;
}

std::vector<Cgpd> enumerate_cgpd(const RankArray& r) {
  validate(r);
  const Dims& dims = r.dims();
  int n = dims.n();
  LaceArray s = lace_array(r);
  Cgpd current{dims, {}};
  for (int i = 0; i < n; ++i)
    current.rects.emplace_back(dims[i], std::vector<Tile>(dims[i + 1], Tile::Blank));

  std::vector<Cgpd> out;
  auto accept = [&] {
    Routing routing = route(current);
    try {
      check_colors(routing);
      check_laces(routing, s);
    } catch (const InvalidCgpd&) {
      return;
    }
    out.push_back(current);
  };

  // Strands are tracked only as present/absent; pipe identities are
  // recovered by route() once the grid is complete.
  std::vector<char> north;
  auto rec = [&](auto&& self, int i, int j, int k, bool east) -> void {
    int C = i < n ? dims[i + 1] : 0;
    if (k == 0) {
      if (j < dims[i]) {
        self(self, i, j + 1, C, true);
      } else if (i + 1 < n) {
        std::vector<char> saved = north;
        north.assign(dims[i + 2] + 1, 0);
        self(self, i + 1, 1, dims[i + 2], true);
        north = std::move(saved);
      } else {
        accept();
      }
      return;
    }
    bool from_north = north[k] != 0;
    Tile options[2];
    if (from_north && east) {
      options[0] = Tile::Cross;
      options[1] = Tile::Bump;
    } else if (east) {
      options[0] = Tile::H;
      options[1] = Tile::ElbowSE;
    } else if (from_north) {
      options[0] = Tile::V;
      options[1] = Tile::ElbowNW;
    } else {
      current.rects[i][j - 1][k - 1] = Tile::Blank;
      self(self, i, j, k - 1, false);
      return;
    }
    for (Tile t : options) {
      auto [w, south] = outputs(t, from_north ? PipeId(0) : std::nullopt,
                                east ? PipeId(0) : std::nullopt);
      current.rects[i][j - 1][k - 1] = t;
      char saved = north[k];
      north[k] = south.has_value();
      self(self, i, j, k - 1, w.has_value());
      north[k] = saved;
    }
  };
  if (n == 0) {
    out.push_back(current);
  } else {
    north.assign(dims[1] + 1, 0);
    rec(rec, 0, 1, dims[1], true);
  }
  std::sort(out.begin(), out.end(),
            [](const Cgpd& a, const Cgpd& b) { return flat_codes(a) < flat_codes(b); });
  return out;
}

int crossing_count(const Cgpd& cgpd) {
  int count = 0;
  for (const auto& grid : cgpd.rects)
    for (const auto& row : grid)
      for (Tile t : row) count += t == Tile::Cross || t == Tile::H || t == Tile::V;
  return count;
}

Polynomial cgpd_weight(const Cgpd& cgpd) { return weight_of(route(cgpd)); }

Polynomial crossing_weight(const Cgpd& cgpd) {
  Polynomial w(1L);
  for (int i = 0; i < int(cgpd.rects.size()); ++i)
    for (int j = 1; j <= int(cgpd.rects[i].size()); ++j)
      for (int k = 1; k <= int(cgpd.rects[i][j - 1].size()); ++k) {
        Tile t = cgpd.rects[i][j - 1][k - 1];
        if (t == Tile::Cross || t == Tile::H || t == Tile::V) w *= linear(i, j, k);
      }
  return w;
}

Polynomial csm_cgpd(const RankArray& r, long* count) {
  auto all = enumerate_cgpd(r);
  Polynomial total;
  for (const auto& c : all) total += cgpd_weight(c);
  if (count) *count = long(all.size());
  return total;
}

Polynomial quiver_poly_cgpd(const RankArray& r, long* total, long* minimal) {
  auto all = enumerate_cgpd(r);
  int best = -1;
  for (const auto& c : all) {
    int k = crossing_count(c);
    if (best < 0 || k < best) best = k;
  }
  Polynomial sum;
  long hits = 0;
  for (const auto& c : all)
    if (crossing_count(c) == best) {
      sum += crossing_weight(c);
      ++hits;
    }
  if (total) *total = long(all.size());
  if (minimal) *minimal = hits;
  return sum;
}

std::string codes(const Cgpd& cgpd) {
  std::string out;
  for (std::size_t i = 0; i < cgpd.rects.size(); ++i) {
    if (i) out += '\n';
    for (const auto& row : cgpd.rects[i]) {
      for (Tile t : row) out += tile_code(t);
      out += '\n';
    }
  }
  return out;
}

}  // namespace qcalc
