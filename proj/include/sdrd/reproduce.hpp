#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sdrd/atlas.hpp"
#include "sdrd/graph.hpp"

namespace sdrd {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Cubic test corpus up to order max_n: K_4, K_{3,3}, the P(m,k) that fit,
/// and seeded random connected cubic graphs of orders 8, 10, 12.
std::vector<NamedGraph> cubic_corpus(int max_n = 12);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Finding {
    std::string title;
    std::string detail;
};

struct ReproduceOptions {
    int jobs = 4;
    /// Reuse an atlas CSV instead of building one (time limits on the build
    /// criterion then cover only the load).
    std::optional<std::string> atlas_path;
    /// Restrict to these criterion ids; empty runs all.
    std::vector<int> only;
};

struct ReproduceReport {
    std::vector<CriterionResult> criteria;
    std::vector<Finding> findings;

    bool all_pass() const;
};

/// Runs the acceptance suite. `on_result` fires as each criterion finishes.
ReproduceReport run_reproduction(const ReproduceOptions& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);
void print_summary(std::ostream& os, const ReproduceReport& report);

} // namespace sdrd
