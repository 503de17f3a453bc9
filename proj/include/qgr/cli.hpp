#ifndef QGR_CLI_HPP
#define QGR_CLI_HPP

#include <cstdint>
#include <string>

#include "qgr/geometry.hpp"

namespace qgr {

// Parsed command-line configuration. Exit codes: 0 all checks pass,
// 1 consistency failure, 2 input/usage error.
struct RunConfig {
    std::string command;
    int m = 0;
    int p = 0;
    int q = 0;
    std::string schedule = "power:1";
    double tol = 1e-8;
    double real_tol = 1e-8;
    uint64_t seed = 0;
    int threads = 1;
    std::string out_path;
    std::string in_path;
    std::string format = "text";  // text | json | dot
    bool certify = false;
    std::string experiment;
    int runs = 50;
    int max_elements = 10000;
};

// "power:k", "geom:r" (rational), or "file:PATH" with one value per line.
ScheduleSpec parse_schedule_spec(const std::string& text);

int cmd_delta(const RunConfig& config);
int cmd_poset(const RunConfig& config);
int cmd_build(const RunConfig& config);
int cmd_solve(const RunConfig& config);
int cmd_certify(const RunConfig& config);
int cmd_experiment(const RunConfig& config);

int run_command(const RunConfig& config);

}  // namespace qgr

#endif
