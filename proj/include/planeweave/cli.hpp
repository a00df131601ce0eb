#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeweave::cli {

// Exit codes are a stable contract:
//   0 ok, 1 verification failure, 2 parse/flag error, 3 size overflow,
//   4 not 2-degenerate, 5 not all-crossing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace planeweave::cli
