#pragma once
// Independent reference checks for tests. Deliberately written from the
// definitions without touching the library's validator or solvers.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "sdrd/graph.hpp"

namespace oracle {

inline bool valid(const sdrd::Graph& g, const std::vector<int>& f, int k = 1, const std::vector<bool>& exempt = {})
{
    for (int v = 0; v < g.order(); ++v) {
        if (!exempt.empty() && exempt[static_cast<std::size_t>(v)])
            continue;
        int sum = f[static_cast<std::size_t>(v)];
        int twos = 0;
        bool three = false;
        bool strong = false;
        for (int w : g.neighbors(v)) {
            const int x = f[static_cast<std::size_t>(w)];
            sum += x;
            twos += x == 2;
            three = three || x == 3;
            strong = strong || x >= 2;
        }
        const int self = f[static_cast<std::size_t>(v)];
        if (self == -1 && !three && twos < 2)
            return false;
        if (self == 1 && !strong)
            return false;
        if (sum < k)
            return false;
    }
    return true;
}

inline std::vector<int> decode(std::uint64_t code, int n)
{
    static const int values[4] = {-1, 1, 2, 3};
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        f[static_cast<std::size_t>(v)] = values[(code >> (2 * v)) & 3];
    return f;
}

/// Minimum total weight by full enumeration; small graphs only.
inline int exhaustive_min(const sdrd::Graph& g, int k = 1)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
        auto f = decode(code, n);
        int w = 0;
        for (int x : f)
            w += x;
        if (w < best && valid(g, f, k))
            best = w;
    }
    return best;
}

/// Minimum alpha-total dominating set size (alpha = 2/3 on cubic graphs) by subset enumeration.
inline int exhaustive_alpha_min(const sdrd::Graph& g)
{
    const int n = g.order();
    int best = n + 1;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int in = 0;
            for (int w : g.neighbors(v))
                in += (s >> w) & 1;
            ok = ((s >> v) & 1) ? in >= 1 : 3 * in >= 2 * g.degree(v);
        }
        if (ok)
            best = std::min(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace oracle
