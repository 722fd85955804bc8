#ifndef QCALC_RENDER_HPP
#define QCALC_RENDER_HPP

#include <string>

#include "qcalc/cgpd.hpp"
#include "qcalc/pipedream.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

enum class Format { Text, Latex };

// Rows of vertices, one per V_i; every lace is a vertical track of 'o'
// joined by '|'.
std::string render_lacing(const LaceArray& s, Format format = Format::Text);
// '+' cross, '.' bump, block rules drawn between blocks.
std::string render_pipedream(const PipeDream& dream, Format format = Format::Text);
// Rectangle i+1 hangs off the lower-left corner of rectangle i; the last,
// tileless rectangle shows as '<' pipe ends.
std::string render_cgpd(const Cgpd& cgpd, Format format = Format::Text);
// '.' for zero, block rules as in render_pipedream.
std::string render_matrix(const IntMatrix& m, const Dims& dims, Format format = Format::Text);
// Upper triangular table of any (i, j) indexed array.
std::string render_table(const TriangularArray& a, Format format = Format::Text);

}  // namespace qcalc

#endif  // QCALC_RENDER_HPP
