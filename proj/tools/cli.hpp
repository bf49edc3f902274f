#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dycktab::cli {

/// Runs the command line given by args (without the program name),
/// reading piped input from `in` and writing to `out` / `err`.
///
/// Exit status: 0 on success, 1 on a domain error (named after the
/// library error kind), 2 on a usage error, 3 when `verify` finds
/// failing propositions.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dycktab::cli
