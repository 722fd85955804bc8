#ifndef QCALC_CLI_HPP
#define QCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qcalc {

// Exit codes: 0 success, 1 bad input or flags, 2 a check or sweep found a
// disagreement.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qcalc

#endif  // QCALC_CLI_HPP
