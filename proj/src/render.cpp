#include "qcalc/render.hpp"

#include <algorithm>
#include <sstream>

#include "qcalc/blockperm.hpp"

namespace qcalc {

namespace {

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Grid of cell strings with rules between row/column blocks.
std::string block_grid(const std::vector<std::vector<std::string>>& cells, const BlockStructure& blocks,
                       Format format) {
  int d = blocks.d();
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  std::ostringstream out;
  if (format == Format::Latex) {
    out << "\\begin{tabular}{";
    for (int p = 1; p <= d; ++p) {
      out << 'c';
      if (p < d && blocks.col_block(p) != blocks.col_block(p + 1)) out << '|';
    }
    out << "}\n";
    for (int q = 1; q <= d; ++q) {
      for (int p = 1; p <= d; ++p) out << (p > 1 ? " & " : "") << cells[q - 1][p - 1];
      out << (q < d ? " \\\\" : "");
      if (q < d && blocks.row_block(q) != blocks.row_block(q + 1)) out << " \\hline";
      out << '\n';
    }
    out << "\\end{tabular}\n";
    return out.str();
  }
  std::string rule;
  for (int p = 1; p <= d; ++p) {
    rule += std::string(width, '-');
    if (p < d) rule += blocks.col_block(p) != blocks.col_block(p + 1) ? "-+-" : "-";
  }
  for (int q = 1; q <= d; ++q) {
    std::string line;
    for (int p = 1; p <= d; ++p) {
      line += pad_left(cells[q - 1][p - 1], width);
      if (p < d) line += blocks.col_block(p) != blocks.col_block(p + 1) ? " | " : " ";
    }
    out << rstrip(line) << '\n';
    if (q < d && blocks.row_block(q) != blocks.row_block(q + 1)) out << rule << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_lacing(const LaceArray& s, Format format) {
  auto laces = s.laces();
  int n = s.dims().n();
  std::ostringstream out;
  if (format == Format::Latex) {
    out << "\\begin{tabular}{r|" << std::string(laces.size(), 'c') << "}\n";
    for (int i = 0; i <= n; ++i) {
      out << i;
      for (auto [p, q] : laces) out << " & " << (p <= i && i <= q ? "$\\bullet$" : "");
      out << (i < n ? " \\\\\n" : "\n");
      if (i == n) break;
      for (auto [p, q] : laces) out << " & " << (p <= i && i + 1 <= q ? "$\\mid$" : "");
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
  }
  std::size_t label = std::to_string(n).size();
  for (int i = 0; i <= n; ++i) {
    std::string line = pad_left(std::to_string(i), label) + " ";
    for (auto [p, q] : laces) line += std::string(" ") + (p <= i && i <= q ? 'o' : ' ');
    out << rstrip(line) << '\n';
    if (i == n) break;
    line = std::string(label + 1, ' ');
    for (auto [p, q] : laces) line += std::string(" ") + (p <= i && i + 1 <= q ? '|' : ' ');
    out << rstrip(line) << '\n';
  }
  return out.str();
}

std::string render_pipedream(const PipeDream& dream, Format format) {
  BlockStructure blocks(dream.dims);
  int d = dream.dims.d();
  std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
  for (int q = 1; q <= d; ++q)
    for (int p = 1; p <= d; ++p) {
      bool x = dream.has_cross(q, p);
      cells[q - 1][p - 1] = format == Format::Latex ? (x ? "$+$" : "$\\cdot$") : (x ? "+" : ".");
    }
  return block_grid(cells, blocks, format);
}

std::string render_matrix(const IntMatrix& m, const Dims& dims, Format format) {
  BlockStructure blocks(dims);
  int d = dims.d();
  std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
  for (int q = 0; q < d; ++q)
    for (int p = 0; p < d; ++p) {
      const Integer& v = m(q, p);
      cells[q][p] = v == 0 ? (format == Format::Latex ? "$\\cdot$" : ".") : v.get_str();
    }
  return block_grid(cells, blocks, format);
}

std::string render_cgpd(const Cgpd& cgpd, Format format) {
  const Dims& dims = cgpd.dims;
  int n = dims.n();
  // rectangle i spans columns [x[i], x[i] + width(i)) and rows [y[i], y[i] + r_i)
  auto width = [&](int i) { return i < n ? dims[i + 1] : 1; };
  std::vector<int> x(n + 1), y(n + 1);
  for (int i = 1; i <= n; ++i) {
    x[i] = x[i - 1] - width(i);
    y[i] = y[i - 1] + dims[i - 1];
  }
  int left = x[n];
  int cols = x[0] + width(0) - left, rows = y[n] + dims[n];
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < dims[i]; ++j)
      for (int k = 0; k < width(i); ++k)
        canvas[y[i] + j][x[i] - left + k] = i < n ? tile_code(cgpd.rects[i][j][k]) : '<';
  std::ostringstream out;
  if (format == Format::Latex) {
    out << "\\begin{tabular}{" << std::string(cols, 'c') << "}\n";
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        char ch = canvas[r][c];
        std::string cell = ch == ' ' ? "" : ch == '<' ? "$\\lhd$" : std::string("\\texttt{") + ch + "}";
        out << (c ? " & " : "") << cell;
      }
      out << (r + 1 < rows ? " \\\\\n" : "\n");
    }
    out << "\\end{tabular}\n";
    return out.str();
  }
  for (const auto& line : canvas) out << rstrip(line) << '\n';
  return out.str();
}

std::string render_table(const TriangularArray& a, Format format) {
  int n = a.dims().n();
  std::ostringstream out;
  if (format == Format::Latex) {
    out << "\\begin{tabular}{c|" << std::string(n + 1, 'c') << "}\n$i \\diagup j$";
    for (int j = 0; j <= n; ++j) out << " & " << j;
    out << " \\\\ \\hline\n";
    for (int i = 0; i <= n; ++i) {
      out << i;
      for (int j = 0; j <= n; ++j) out << " & " << (j >= i ? std::to_string(a.at(i, j)) : "");
      out << (i < n ? " \\\\\n" : "\n");
    }
    out << "\\end{tabular}\n";
    return out.str();
  }
  std::size_t w = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) w = std::max(w, std::to_string(a.at(i, j)).size());
  w = std::max(w, std::to_string(n).size());
  std::string head = "i\\j";
  std::size_t lw = std::max(head.size(), std::to_string(n).size());
  std::string line = pad_left(head, lw);
  for (int j = 0; j <= n; ++j) line += "  " + pad_left(std::to_string(j), w);
  out << line << '\n';
  for (int i = 0; i <= n; ++i) {
    line = pad_left(std::to_string(i), lw);
    for (int j = 0; j <= n; ++j) line += "  " + pad_left(j >= i ? std::to_string(a.at(i, j)) : "", w);
    out << rstrip(line) << '\n';
  }
  return out.str();
}

}  // namespace qcalc
