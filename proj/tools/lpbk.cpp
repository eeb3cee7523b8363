// command line front end: lpbk <command> --config job.json [--out path]
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lpbk/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"littlewood-paley toolkit"};
    std::string command, config_path, out_override;
    long long seed = -1;
    int threads = 0;
    app.add_option("command", command, "one of: norm, bands, op, verify, report")->required();
    app.add_option("--config", config_path, "json job config")->required();
    app.add_option("--out", out_override, "output path (overrides the config)");
    app.add_option("--seed", seed, "override the family seed");
    app.add_option("--threads", threads, "worker threads (env LPBK_THREADS also works)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "error: cannot open config " << config_path << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << is.rdbuf();
        lpbk::JobConfig cfg = lpbk::parse_config(buf.str());
        cfg.command = command;
        if (!out_override.empty()) cfg.out = out_override;
        if (seed >= 0) cfg.family.seed = static_cast<std::uint64_t>(seed);
        if (threads == 0) {
            if (const char* env = std::getenv("LPBK_THREADS")) threads = std::atoi(env);
        }
        if (threads > 0) cfg.threads = threads;
        return lpbk::run_job(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
