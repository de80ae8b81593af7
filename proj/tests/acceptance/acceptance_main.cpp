// Runs the acceptance suites with the default seed and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.
//
//   acceptance [--seed N] [suite ...]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "zariski/suites.hpp"

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    std::uint64_t seed = zariski::kDefaultSeed;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (auto id = zariski::find_suite(arg)) {
            ids.push_back(*id);
        } else {
            std::fprintf(stderr, "unknown suite '%s'\n", arg.c_str());
            return 2;
        }
    }
    if (ids.empty())
        for (const auto& info : zariski::suite_catalog()) ids.push_back(info.id);

    int failed = 0;
    double total = 0;
    for (int id : ids) {
        const auto report = zariski::run_suite(id, seed);
        total += report.seconds;
        const bool ok = report.result.passed() && report.result.checked > 0;
        if (!ok) ++failed;
        std::printf("%s  %2d %-30s checked=%zu violations=%zu (%.2fs)\n", ok ? "PASS" : "FAIL", id,
                    report.info.name.c_str(), report.result.checked, report.result.violations, report.seconds);
        for (const auto& f : report.result.failures) std::printf("      %s\n", f.c_str());
    }
    std::printf("%zu/%zu criteria passed in %.2fs\n", ids.size() - static_cast<std::size_t>(failed), ids.size(), total);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
