#pragma once

#include <iosfwd>

namespace ckgeom::cli {

enum ExitCode : int {
    kOk = 0,
    kMalformed = 1,
    kPrecondition = 2,
    kVerificationFailed = 3,
};

/// Entry point of the `ckgeom` tool: run <scenario.json>, census <tag> <n>,
/// verify <report.json> [--order k].
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ckgeom::cli
