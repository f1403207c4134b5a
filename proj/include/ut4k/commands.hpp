// The five operations behind the CLI, usable directly from tests. Each
// returns the exact JSON report, a human-readable rendering, and the process
// exit code (0 ok/isomorphic, 1 not isomorphic or failed checks, 4 success
// with a completeness caveat; parse and domain failures are thrown).
#pragma once

#include "ut4k/io.hpp"

namespace ut4k {

struct CommandResult {
    nlohmann::json report;
    std::string human;
    int exitCode = 0;
};

CommandResult cmdInvariant(const std::string& thetaText, bool approx);
CommandResult cmdClassify(const std::string& thetaText, const std::string& etaText, bool approx);
CommandResult cmdEquivalents(const std::string& thetaText, const Int& bound, bool approx);
CommandResult cmdKGroups(const std::string& preset, const std::string& matrixFile);
CommandResult cmdVerify();

// The warning attached to the rank-4 preset: the even cokernel computes to
// free rank 6, not the rank-2 value quoted in one published derivation.
extern const char* const kEvenCokernelNote;

} // namespace ut4k
