#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lwc::cli {

struct Options {
  /// Colour PASS/FAIL markers.
  bool color = false;
};

/// Runs one command. Returns 0 on success, 1 on operational errors and
/// failed checks, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace lwc::cli
