#pragma once
// config-driven job runner behind the command line tool
#include <map>
#include <optional>
#include <string>

#include "lpbk/checks.hpp"
#include "lpbk/grid.hpp"
#include "lpbk/spaces.hpp"

namespace lpbk {

struct JobConfig {
    std::string command;  // norm | bands | op | verify | report
    GridSpec grid;
    std::string cutoff_id = "exp-inv";

    // field source: preset id + params, or a raw field file
    std::string preset = "harmonic";
    std::map<std::string, double> preset_params{{"k0", 1.0}};
    std::string field_file;  // wins over preset when nonempty

    SpaceParams space;

    std::string op_name = "heat";
    std::map<std::string, double> op_params;

    std::string check_id;
    std::map<std::string, double> check_params;
    FunctionFamily family;

    std::string out;  // empty = stdout
    int threads = 0;  // 0 = leave as configured
};

// parses the JSON config text; throws std::invalid_argument with a message on
// malformed input ("inf"/"-inf" strings are accepted wherever numbers are)
JobConfig parse_config(const std::string& json_text);

// exit code contract: 0 ok, 1 = a verification bound failed, 2 = bad input
int run_job(const JobConfig& cfg);

}  // namespace lpbk
