// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "sdrd/reproduce.hpp"

int main(int argc, char** argv)
{
    sdrd::ReproduceOptions options;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc)
            options.jobs = std::atoi(argv[++i]);
        else if (arg == "--atlas" && i + 1 < argc)
            options.atlas_path = argv[++i];
        else if (arg == "--only" && i + 1 < argc)
            options.only.push_back(std::atoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--jobs N] [--atlas CSV] [--only ID]...\n";
            return 2;
        }
    }
    auto report = sdrd::run_reproduction(options, [](const sdrd::CriterionResult& r) {
        std::cout << sdrd::format_result(r) << std::endl;
    });
    sdrd::print_summary(std::cout, report);
    return report.all_pass() ? 0 : 1;
}
