#pragma once

/**
 * @file verify.hpp
 * @brief The cross-formula verification suite.
 *
 * Runs every identity the library claims (value agreement across
 * evaluators, generating-function coefficient extraction, cleared
 * denominator identities, integrality of the integer specializations,
 * plumbing properties) over a named parameter grid and reports one
 * record per check instance. Record order and content are deterministic
 * for a given grid, so serialized reports are byte-stable across runs.
 */

#include <string>
#include <vector>

namespace apsum {

struct CheckRecord {
    std::string check;   // kebab-case check name
    std::string params;  // rendered parameter description
    std::string source;  // where the expected values come from
    bool pass = true;
    std::vector<std::string> mismatches;  // capped; empty when passing
};

struct VerifyReport {
    std::string grid;  // "small" or "full"
    std::vector<CheckRecord> records;
    long passed = 0;
    long failed = 0;
    double wall_seconds = 0.0;  // for human-readable output only; JSON
                                // serialization omits it so consecutive
                                // runs compare byte-for-byte
};

/// grid_name is "small" (CI-sized, sub-10-second) or "full" (the module
/// verification grids). Throws std::invalid_argument otherwise.
VerifyReport run_verify(const std::string& grid_name);

}  // namespace apsum
