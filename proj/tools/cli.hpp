#ifndef NILFIX_CLI_HPP
#define NILFIX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "nilfix/matrix.hpp"
#include "nilfix/polynomial.hpp"

namespace nilfix::cli {

/// Parses and dispatches one command line (without the program name).
/// Exit status: 0 success, 1 domain or numeric error, 2 usage error.
/// `verify` additionally exits nonzero on any cross-check mismatch.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// "a0,a1,...,1", low degree first, last entry 1. Exact big-integer parse;
/// throws std::invalid_argument on empty input, non-integer tokens or a
/// non-monic coefficient list.
IntPolynomial parse_polynomial(const std::string& text);

/// Matrix file format: first token r, then r rows of r integers.
IntegerMatrix read_matrix(std::istream& in);

} // namespace nilfix::cli

#endif
