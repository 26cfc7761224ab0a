#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "hardy/error.hpp"
#include "hardy/experiments.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* preset;
    double seconds;
};

const Criterion kCriteria[] = {
    {1, "PET golden types", "pet-golden", 1},
    {2, "classifier table", "classifier-table", 1},
    {3, "type decrease and termination", "type-decrease", 30},
    {4, "seminorm oracle equivalence", "seminorm-oracle", 300},
    {5, "limit formula", "limit-formula", 120},
    {6, "product splitting", "product-splitting", 300},
    {7, "recurrence lower bound", "rotation-arc-quarter", 600},
    {8, "Taylor windows", "taylor-windows", 60},
    {9, "bad-sequence oscillation", "bad-parity", 60},
    {10, "van der Corput inequality", "vdc-inequality", 60},
    {11, "floor certification", "floor-certification", 60},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    std::string report_dir;
    bool verbose = false;
    app.add_option("--only", only, "criterion numbers to run");
    app.add_option("--report-dir", report_dir, "write one JSON report per criterion here");
    app.add_flag("-v,--verbose", verbose, "print every verdict");
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        hardy::ExperimentReport report;
        std::string error;
        try {
            report = hardy::find_preset(c.preset).run(hardy::ExperimentOptions{});
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.seconds;
        const bool pass = error.empty() && report.passed() && in_time;
        failures += !pass;
        std::printf("%s  %2d  %-32s %8.2f s (limit %g s)\n", pass ? "PASS" : "FAIL", c.id, c.title, elapsed, c.seconds);
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        if (!in_time) std::printf("      over the time limit\n");
        for (const auto& v : report.verdicts) {
            if (verbose || !v.pass) {
                std::printf("      %s %s: %s (%s)\n", v.pass ? "ok  " : "MISS", v.name.c_str(), v.observed.dump().c_str(),
                            v.criterion.c_str());
            }
        }
        std::fflush(stdout);
        if (!report_dir.empty()) {
            std::ofstream out(report_dir + "/criterion_" + std::to_string(c.id) + ".json");
            out << report.to_json().dump(2) << "\n";
        }
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
