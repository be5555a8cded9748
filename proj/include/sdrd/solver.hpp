#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdrd/graph.hpp"
#include "sdrd/labeling.hpp"

namespace sdrd {

/// Raised when an instance exceeds a solver's configured size cap.
class SizeLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveSpec {
    Graph graph;
    int k = 1;
    /// Per-vertex pinned label; empty means nothing is pinned.
    std::vector<std::optional<Label>> fixed;
    /// Vertices whose own conditions are waived; empty means none.
    VertexMask exempt;
    /// Vertices summed by the objective; empty means all of V.
    VertexMask objective;

    explicit SolveSpec(Graph g) : graph(std::move(g)) {}

    SolveSpec& fix(int v, Label l);
    SolveSpec& exempt_vertex(int v);
    SolveSpec& objective_only(std::span<const int> vertices);

    bool is_fixed(int v) const { return !fixed.empty() && fixed[static_cast<std::size_t>(v)].has_value(); }
    bool is_exempt(int v) const { return !exempt.empty() && exempt[static_cast<std::size_t>(v)]; }
    bool in_objective(int v) const { return objective.empty() || objective[static_cast<std::size_t>(v)]; }

    /// Throws std::invalid_argument on malformed masks or k < 1.
    void check() const;
};

enum class SolveStatus { Optimal, Infeasible };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    int min_weight = 0;
    Labeling witness;

    bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Default vertex cap for branch and bound; the SDRD_SIZE_LIMIT environment
/// variable overrides it.
inline constexpr int kDefaultBnbLimit = 26;
int bnb_size_limit();

inline constexpr int kBruteForceLimit = 14;

/// Exact minimum by branch and bound. Returns the lexicographically smallest
/// optimal witness (vertex id order, -1 < 1 < 2 < 3).
SolveResult solve_bnb(const SolveSpec& spec);
SolveResult solve_bnb(const SolveSpec& spec, int size_limit);

enum class StripTopology { Open, Cyclic };

/// True when the graph is a 2xW ladder in the u/v id layout (open), or its
/// cyclic closure (P(W,1)).
bool is_ladder(const Graph& g, StripTopology topology);

/// Exact minimum by a column sweep over 2xW ladders. Same contract as
/// solve_bnb. Throws std::invalid_argument for graphs that are not ladders of
/// the requested topology.
SolveResult solve_strip_dp(const SolveSpec& spec, StripTopology topology);

/// Minimum objective weight only (no witness); nullopt when infeasible.
std::optional<int> strip_dp_value(const SolveSpec& spec, StripTopology topology);

/// Enumerates all labelings of the free vertices in lexicographic order.
/// Refuses instances with more than kBruteForceLimit free vertices.
SolveResult brute_force(const SolveSpec& spec);

} // namespace sdrd
