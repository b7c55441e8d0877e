#pragma once

#include <string>
#include <vector>

namespace ordring {

struct RunResult {
    int code = 0;        // 0 ok, 1 domain failure, 2 usage error
    std::string report;  // full report text (INPUTS / RESULT / CERTIFICATION)
};

// Dispatches a CLI invocation. argv excludes the program name.
RunResult run_cli(const std::vector<std::string>& argv);

}  // namespace ordring
