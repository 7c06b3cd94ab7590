#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polya {

struct VerifyOptions {
    std::size_t oracle_max = 8;   ///< largest tree size for per-tree checks
    std::size_t forest_max = 0;   ///< largest forest size; 0 means min(oracle_max + 2, 12)
    std::size_t series_order = 100;  ///< order for series-vs-series identities
};

struct VerifyCheck {
    std::string name;
    std::string range;     ///< e.g. "n=1..8"
    std::size_t cases = 0; ///< number of individual comparisons made
    bool passed = true;
    std::string detail;    ///< first mismatch, empty on success
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyCheck> checks;
    /// Informational findings that are not pass/fail checks.
    std::vector<std::string> notes;
    bool all_passed() const;
};

/// Runs every oracle-vs-series equivalence.
VerifyReport run_verify(VerifyOptions options);

}  // namespace polya
