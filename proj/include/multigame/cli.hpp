#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multigame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoEquilibrium = 1;
inline constexpr int kExitInputError = 2;

// Entry point behind the `multigame` executable; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multigame
