#pragma once

#include <iosfwd>

namespace gearsynth::cli {

/// Full command-line front end, parameterized on output streams so tests can
/// drive it in-process. Returns the process exit code:
///   0  success
///   1  input error (bad flags, unreadable/invalid spec file, bad values)
///   2  synthesis found no feasible design
///   3  check ran cleanly and the design is infeasible
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gearsynth::cli
