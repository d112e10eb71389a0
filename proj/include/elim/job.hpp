#pragma once

#include "json.hpp"

namespace elim {

struct JobOutcome {
    nlohmann::json report;
    int exit_code = 0;  // 0 success, 1 computation error, 2 input error
};

// Runs one job document: {"command": ..., "payload": {...}, "seed": ...}.
// Never throws; every failure is serialized into the report.  The report is
// a pure function of the job except for its timing fields.
JobOutcome run_job(const nlohmann::json& job);

}  // namespace elim
