#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flipdist {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Exit code 0 on success, 1 on a
/// domain error (invalid input, failed audit, lemma violation), 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flipdist
