#pragma once

#include "hfconc/cfk.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hfconc::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDisagreement = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `trefoil`, `unknot`, `T(p,q)`, `fam2:p` or `fam3:p`.
KnotSpec parse_knot(const std::string& text);

/// Runs one command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfconc::cli
