#include <cstdlib>
#include <limits>
#include <string>

#include "sdrd/solver.hpp"

namespace sdrd {

SolveSpec& SolveSpec::fix(int v, Label l)
{
    if (v < 0 || v >= graph.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (fixed.empty())
        fixed.assign(static_cast<std::size_t>(graph.order()), std::nullopt);
    fixed[static_cast<std::size_t>(v)] = l;
    return *this;
}

SolveSpec& SolveSpec::exempt_vertex(int v)
{
    if (v < 0 || v >= graph.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (exempt.empty())
        exempt.assign(static_cast<std::size_t>(graph.order()), false);
    exempt[static_cast<std::size_t>(v)] = true;
    return *this;
}

SolveSpec& SolveSpec::objective_only(std::span<const int> vertices)
{
    objective = mask_of(graph.order(), vertices);
    return *this;
}

void SolveSpec::check() const
{
    const auto n = static_cast<std::size_t>(graph.order());
    if (k < 1)
        throw std::invalid_argument("threshold k must be >= 1");
    if (!fixed.empty() && fixed.size() != n)
        throw std::invalid_argument("fixed-label vector length mismatch");
    if (!exempt.empty() && exempt.size() != n)
        throw std::invalid_argument("exempt mask length mismatch");
    if (!objective.empty() && objective.size() != n)
        throw std::invalid_argument("objective mask length mismatch");
}

int bnb_size_limit()
{
    if (const char* env = std::getenv("SDRD_SIZE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < std::numeric_limits<int>::max())
            return static_cast<int>(v);
    }
    return kDefaultBnbLimit;
}

SolveResult brute_force(const SolveSpec& spec)
{
    spec.check();
    const Graph& g = spec.graph;
    const int n = g.order();

    std::vector<int> free_vertices;
    std::vector<Label> labels(static_cast<std::size_t>(n), Label::MinusOne);
    for (int v = 0; v < n; ++v) {
        if (spec.is_fixed(v))
            labels[static_cast<std::size_t>(v)] = *spec.fixed[static_cast<std::size_t>(v)];
        else
            free_vertices.push_back(v);
    }
    if (free_vertices.size() > static_cast<std::size_t>(kBruteForceLimit))
        throw SizeLimitExceeded("brute force is limited to " + std::to_string(kBruteForceLimit) +
                                " free vertices (instance has " + std::to_string(free_vertices.size()) + ")");

    int w = 0;
    for (int v = 0; v < n; ++v)
        if (spec.in_objective(v))
            w += value(labels[static_cast<std::size_t>(v)]);

    // Odometer over the free vertices, lowest id most significant, so the
    // first labeling reaching a new minimum is the lexicographically smallest.
    SolveResult result;
    int best = std::numeric_limits<int>::max();
    const std::size_t f = free_vertices.size();
    std::vector<int> digit(f, 0);
    auto relabel = [&](std::size_t pos, int d) {
        const int v = free_vertices[pos];
        const auto i = static_cast<std::size_t>(v);
        if (spec.in_objective(v))
            w += value(kLabels[static_cast<std::size_t>(d)]) - value(labels[i]);
        labels[i] = kLabels[static_cast<std::size_t>(d)];
        digit[pos] = d;
    };
    while (true) {
        if (w < best && is_valid(g, labels, spec.k, spec.exempt)) {
            best = w;
            result.status = SolveStatus::Optimal;
            result.min_weight = w;
            result.witness = Labeling(labels);
        }
        std::size_t pos = f;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (digit[pos] < 3) {
                relabel(pos, digit[pos] + 1);
                done = false;
                break;
            }
            relabel(pos, 0);
        }
        if (done)
            break;
    }
    return result;
}

} // namespace sdrd
