#ifndef DIOPH_CLI_HPP
#define DIOPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dioph/poly.hpp"

namespace dioph {

/// Runs one command; `args` excludes the program name. Returns 0 on success,
/// 1 on a failed verification or counterexample, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed pair file: one "expr ; expr" per line, '#' starts a comment.
std::vector<std::pair<Poly, Poly>> parse_seed_pairs(const std::string& text);

}  // namespace dioph

#endif  // DIOPH_CLI_HPP
