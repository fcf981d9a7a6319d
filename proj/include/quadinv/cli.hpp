#pragma once

/**
 * @file cli.hpp
 * @brief Entry point of the command-line tool, callable from tests.
 *
 * Every command prints one JSON document on `out`. Exit codes: 0 success,
 * 1 malformed input or a request that cannot be met (printed as
 * {"error": {...}}), 2 a certificate disagreed with the oracle.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace quadinv {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadinv
