#pragma once

#include <iosfwd>
#include <string>

#include "lincut/earcut.hpp"
#include "lincut/triangulation.hpp"

namespace lincut::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPipeline = 3,
  kQueueExhausted = 4,
  kValidation = 5,
};

/// Problem file: "P S", then P lines "x y", then S lines "i j" (0-based).
ProblemInput read_problem(std::istream& in);
/// Pocket file: "N", then N lines "x y" in chain order.
PocketPolygon read_pocket(std::istream& in);

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name. Results go to `out` (unless --output is given),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lincut::cli
