#pragma once

#include <iosfwd>

namespace fanowalls::cli {

/// Entry point of `fano-walls`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fanowalls::cli
