#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace elim {

// One row of the selftest table.  Everything except seconds is a pure
// function of the seed, so two runs with the same seed agree byte for byte
// once timing is set aside.
struct PropertyResult {
    std::string name;
    int checked = 0;  // instances that ran to a verdict
    int skipped = 0;  // degenerate draws, excluded but counted
    int failed = 0;
    bool pass = false;
    double seconds = 0.0;
    // First few failing instances, keyed and sorted by draw index.
    std::vector<std::pair<int, std::string>> failures;
};

std::vector<PropertyResult> run_selftest(std::uint64_t seed);

}  // namespace elim
