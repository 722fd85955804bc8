#ifndef QCALC_IO_HPP
#define QCALC_IO_HPP

#include <string>

#include "json.hpp"
#include "qcalc/blockperm.hpp"
#include "qcalc/cgpd.hpp"
#include "qcalc/engine.hpp"
#include "qcalc/pipedream.hpp"
#include "qcalc/quiver.hpp"

namespace qcalc {

using Json = nlohmann::ordered_json;

// Thrown as InvalidInput (or ParseError for malformed JSON text).
Json parse_json(const std::string& text);

Dims dims_from_json(const Json& j);
// {"dims": [...], "rank": {"i,j": v}} or {"dims": [...], "lace": {"p,q": v}}.
// Missing off-diagonal entries are an error; diagonal rank entries default
// to r_i.  When both tables are present they must agree.  The result is
// validated.
RankArray orbit_from_json(const Json& j);
bool has_orbit(const Json& j);
Json to_json(const RankArray& r);  // dims, rank and lace
Json lace_json(const LaceArray& s);

// {"dims": [...], "crosses": [[q, p], ...]}; "d" alone means one block.
PipeDream pipedream_from_json(const Json& j);
Json to_json(const PipeDream& dream);

// {"dims": [...], "rects": [[["r", "-"], ...], ...]}; dims default to the
// rectangle shapes.
Cgpd cgpd_from_json(const Json& j);
Json to_json(const Cgpd& cgpd);

// {"dims": [...], "phi": [matrix, ...]}
Rep rep_from_json(const Json& j);

Json to_json(const Permutation& v);

Json to_json(const ConsistencyReport& rep, Style style, bool timings);
Json to_json(const SweepReport& sweep, Style style, bool timings);

}  // namespace qcalc

#endif  // QCALC_IO_HPP
