#include <algorithm>
#include <array>
#include <climits>

#include "sdrd/solver.hpp"

namespace sdrd {

namespace {

// Column state: pair index p = 4 * rank(bottom label) + rank(top label).
// Index kAbsent stands for a missing neighbor column at an open end.
constexpr int kPairs = 16;
constexpr int kAbsent = 16;
constexpr int kSides = 17;
constexpr int kInf = INT_MAX / 4;
constexpr std::array<int, 4> kValueByRank = {-1, 1, 2, 3};

int bottom(int p) { return p / 4; }
int top(int p) { return p % 4; }

struct Columns {
    int width = 0;
    int k = 1;
    std::vector<std::array<bool, kPairs>> allowed;
    std::vector<std::array<int, kPairs>> cost;
    std::vector<int> exempt_bits; // bit 0 bottom, bit 1 top
};

// ok[exempt_bits][left][mid][right] for the two vertices of a column.
class ColumnChecks {
public:
    explicit ColumnChecks(int k)
    {
        for (int ex = 0; ex < 4; ++ex)
            for (int l = 0; l < kSides; ++l)
                for (int m = 0; m < kPairs; ++m)
                    for (int r = 0; r < kSides; ++r)
                        table_[index(ex, l, m, r)] = compute(k, ex, l, m, r);
    }

    bool ok(int ex, int l, int m, int r) const { return table_[index(ex, l, m, r)]; }

private:
    static std::size_t index(int ex, int l, int m, int r)
    {
        return static_cast<std::size_t>(((ex * kSides + l) * kPairs + m) * kSides + r);
    }

    static bool vertex_ok(int k, int self, const std::array<int, 3>& nb, int count)
    {
        int sum = kValueByRank[static_cast<std::size_t>(self)];
        int twos = 0;
        int threes = 0;
        for (int i = 0; i < count; ++i) {
            int r = nb[static_cast<std::size_t>(i)];
            sum += kValueByRank[static_cast<std::size_t>(r)];
            twos += r == 2;
            threes += r == 3;
        }
        if (sum < k)
            return false;
        if (self == 0 && threes == 0 && twos < 2)
            return false;
        if (self == 1 && twos + threes == 0)
            return false;
        return true;
    }

    static bool compute(int k, int ex, int l, int m, int r)
    {
        for (int row = 0; row < 2; ++row) {
            if (ex & (1 << row))
                continue;
            auto pick = [row](int p) { return row == 0 ? bottom(p) : top(p); };
            std::array<int, 3> nb{};
            int count = 0;
            nb[static_cast<std::size_t>(count++)] = row == 0 ? top(m) : bottom(m);
            if (l != kAbsent)
                nb[static_cast<std::size_t>(count++)] = pick(l);
            if (r != kAbsent)
                nb[static_cast<std::size_t>(count++)] = pick(r);
            if (!vertex_ok(k, pick(m), nb, count))
                return false;
        }
        return true;
    }

    std::array<bool, 4 * kSides * kPairs * kSides> table_{};
};

struct Sweep {
    int value = kInf;
    std::vector<int> pairs; // chosen pair per column when traced
};

using Frontier = std::array<int, kSides * kPairs>;

int fidx(int prev, int cur) { return prev * kPairs + cur; }

// Runs columns [from, width) starting from `init`, verifying column c-1 each
// time column c is added. Parents are recorded per column when requested.
void advance(const Columns& cols, const ColumnChecks& checks, Frontier& dp, int from,
             std::vector<std::array<short, kSides * kPairs>>* parents)
{
    for (int c = from; c < cols.width; ++c) {
        Frontier next;
        next.fill(kInf);
        std::array<short, kSides * kPairs> par{};
        const int ex = cols.exempt_bits[static_cast<std::size_t>(c - 1)];
        const auto& allowed = cols.allowed[static_cast<std::size_t>(c)];
        const auto& cost = cols.cost[static_cast<std::size_t>(c)];
        for (int prev = 0; prev < kSides; ++prev)
            for (int cur = 0; cur < kPairs; ++cur) {
                const int base = dp[static_cast<std::size_t>(fidx(prev, cur))];
                if (base >= kInf)
                    continue;
                for (int s = 0; s < kPairs; ++s) {
                    if (!allowed[static_cast<std::size_t>(s)] || !checks.ok(ex, prev, cur, s))
                        continue;
                    const int v = base + cost[static_cast<std::size_t>(s)];
                    int& slot = next[static_cast<std::size_t>(fidx(cur, s))];
                    if (v < slot) {
                        slot = v;
                        par[static_cast<std::size_t>(fidx(cur, s))] = static_cast<short>(prev);
                    }
                }
            }
        dp = next;
        if (parents)
            (*parents)[static_cast<std::size_t>(c)] = par;
    }
}

std::vector<int> trace_back(const Columns& cols, const std::vector<std::array<short, kSides * kPairs>>& parents,
                            int prev, int cur)
{
    std::vector<int> pairs(static_cast<std::size_t>(cols.width));
    for (int c = cols.width - 1; c >= 1; --c) {
        pairs[static_cast<std::size_t>(c)] = cur;
        int p = parents[static_cast<std::size_t>(c)][static_cast<std::size_t>(fidx(prev, cur))];
        cur = prev;
        prev = p;
    }
    pairs[0] = cur;
    return pairs;
}

Sweep sweep_open(const Columns& cols, const ColumnChecks& checks, bool trace)
{
    Sweep out;
    const int w = cols.width;
    if (w == 1) {
        for (int s = 0; s < kPairs; ++s) {
            if (!cols.allowed[0][static_cast<std::size_t>(s)] || !checks.ok(cols.exempt_bits[0], kAbsent, s, kAbsent))
                continue;
            if (cols.cost[0][static_cast<std::size_t>(s)] < out.value) {
                out.value = cols.cost[0][static_cast<std::size_t>(s)];
                out.pairs = {s};
            }
        }
        return out;
    }
    Frontier dp;
    dp.fill(kInf);
    for (int s = 0; s < kPairs; ++s)
        if (cols.allowed[0][static_cast<std::size_t>(s)])
            dp[static_cast<std::size_t>(fidx(kAbsent, s))] = cols.cost[0][static_cast<std::size_t>(s)];
    std::vector<std::array<short, kSides * kPairs>> parents;
    if (trace)
        parents.resize(static_cast<std::size_t>(w));
    advance(cols, checks, dp, 1, trace ? &parents : nullptr);

    const int ex = cols.exempt_bits[static_cast<std::size_t>(w - 1)];
    int best_prev = -1;
    int best_cur = -1;
    for (int prev = 0; prev < kSides; ++prev)
        for (int cur = 0; cur < kPairs; ++cur) {
            const int v = dp[static_cast<std::size_t>(fidx(prev, cur))];
            if (v < out.value && checks.ok(ex, prev, cur, kAbsent)) {
                out.value = v;
                best_prev = prev;
                best_cur = cur;
            }
        }
    if (trace && best_cur >= 0)
        out.pairs = trace_back(cols, parents, best_prev, best_cur);
    return out;
}

Sweep sweep_cyclic_from(const Columns& cols, const ColumnChecks& checks, int s0, int s1, bool trace)
{
    Sweep out;
    const int w = cols.width;
    Frontier dp;
    dp.fill(kInf);
    dp[static_cast<std::size_t>(fidx(s0, s1))] =
        cols.cost[0][static_cast<std::size_t>(s0)] + cols.cost[1][static_cast<std::size_t>(s1)];
    std::vector<std::array<short, kSides * kPairs>> parents;
    if (trace)
        parents.resize(static_cast<std::size_t>(w));
    advance(cols, checks, dp, 2, trace ? &parents : nullptr);

    const int ex_last = cols.exempt_bits[static_cast<std::size_t>(w - 1)];
    const int ex_first = cols.exempt_bits[0];
    int best_prev = -1;
    int best_cur = -1;
    for (int prev = 0; prev < kPairs; ++prev)
        for (int cur = 0; cur < kPairs; ++cur) {
            const int v = dp[static_cast<std::size_t>(fidx(prev, cur))];
            if (v >= out.value)
                continue;
            if (!checks.ok(ex_last, prev, cur, s0) || !checks.ok(ex_first, cur, s0, s1))
                continue;
            out.value = v;
            best_prev = prev;
            best_cur = cur;
        }
    if (trace && best_cur >= 0) {
        // Column 1's parent is column 0 itself; fill it in for the trace.
        parents[1][static_cast<std::size_t>(fidx(s0, s1))] = static_cast<short>(kAbsent);
        out.pairs = trace_back(cols, parents, best_prev, best_cur);
        out.pairs[0] = s0;
    }
    return out;
}

Sweep sweep_cyclic(const Columns& cols, const ColumnChecks& checks, bool trace)
{
    Sweep best;
    int best_s0 = -1;
    int best_s1 = -1;
    for (int s0 = 0; s0 < kPairs; ++s0) {
        if (!cols.allowed[0][static_cast<std::size_t>(s0)])
            continue;
        for (int s1 = 0; s1 < kPairs; ++s1) {
            if (!cols.allowed[1][static_cast<std::size_t>(s1)])
                continue;
            Sweep s = sweep_cyclic_from(cols, checks, s0, s1, false);
            if (s.value < best.value) {
                best.value = s.value;
                best_s0 = s0;
                best_s1 = s1;
            }
        }
    }
    if (trace && best_s0 >= 0)
        best = sweep_cyclic_from(cols, checks, best_s0, best_s1, true);
    return best;
}

Graph expected_ladder(int width, StripTopology topology)
{
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < width; ++c) {
        edges.emplace_back(c, width + c);
        if (c + 1 < width) {
            edges.emplace_back(c, c + 1);
            edges.emplace_back(width + c, width + c + 1);
        }
    }
    if (topology == StripTopology::Cyclic) {
        edges.emplace_back(width - 1, 0);
        edges.emplace_back(2 * width - 1, width);
    }
    return Graph(2 * width, edges);
}

Columns make_columns(const SolveSpec& spec, const std::vector<int>& pins)
{
    Columns cols;
    cols.width = spec.graph.order() / 2;
    cols.k = spec.k;
    const int w = cols.width;
    cols.allowed.resize(static_cast<std::size_t>(w));
    cols.cost.resize(static_cast<std::size_t>(w));
    cols.exempt_bits.resize(static_cast<std::size_t>(w));
    for (int c = 0; c < w; ++c) {
        const int ub = c;
        const int vt = w + c;
        cols.exempt_bits[static_cast<std::size_t>(c)] = (spec.is_exempt(ub) ? 1 : 0) | (spec.is_exempt(vt) ? 2 : 0);
        for (int p = 0; p < kPairs; ++p) {
            const int rb = bottom(p);
            const int rt = top(p);
            const int pb = pins[static_cast<std::size_t>(ub)];
            const int pt = pins[static_cast<std::size_t>(vt)];
            cols.allowed[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] =
                (pb < 0 || pb == rb) && (pt < 0 || pt == rt);
            cols.cost[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] =
                (spec.in_objective(ub) ? kValueByRank[static_cast<std::size_t>(rb)] : 0) +
                (spec.in_objective(vt) ? kValueByRank[static_cast<std::size_t>(rt)] : 0);
        }
    }
    return cols;
}

void require_ladder(const SolveSpec& spec, StripTopology topology)
{
    spec.check();
    if (!is_ladder(spec.graph, topology))
        throw std::invalid_argument(std::string("graph is not a ") +
                                    (topology == StripTopology::Open ? "2xW ladder" : "cyclic ladder P(W,1)") +
                                    " in the u/v id layout");
}

std::vector<int> initial_pins(const SolveSpec& spec)
{
    std::vector<int> pins(static_cast<std::size_t>(spec.graph.order()), -1);
    for (int v = 0; v < spec.graph.order(); ++v)
        if (spec.is_fixed(v))
            pins[static_cast<std::size_t>(v)] = rank(*spec.fixed[static_cast<std::size_t>(v)]);
    return pins;
}

Sweep run(const SolveSpec& spec, StripTopology topology, const ColumnChecks& checks, const std::vector<int>& pins,
          bool trace)
{
    Columns cols = make_columns(spec, pins);
    return topology == StripTopology::Open ? sweep_open(cols, checks, trace) : sweep_cyclic(cols, checks, trace);
}

std::vector<int> pairs_to_ranks(const std::vector<int>& pairs)
{
    const int w = static_cast<int>(pairs.size());
    std::vector<int> ranks(static_cast<std::size_t>(2 * w));
    for (int c = 0; c < w; ++c) {
        ranks[static_cast<std::size_t>(c)] = bottom(pairs[static_cast<std::size_t>(c)]);
        ranks[static_cast<std::size_t>(w + c)] = top(pairs[static_cast<std::size_t>(c)]);
    }
    return ranks;
}

} // namespace

bool is_ladder(const Graph& g, StripTopology topology)
{
    const int n = g.order();
    if (n < 2 || n % 2 != 0)
        return false;
    const int width = n / 2;
    if (topology == StripTopology::Cyclic && width < 3)
        return false;
    return g == expected_ladder(width, topology);
}

std::optional<int> strip_dp_value(const SolveSpec& spec, StripTopology topology)
{
    require_ladder(spec, topology);
    ColumnChecks checks(spec.k);
    Sweep s = run(spec, topology, checks, initial_pins(spec), false);
    if (s.value >= kInf)
        return std::nullopt;
    return s.value;
}

SolveResult solve_strip_dp(const SolveSpec& spec, StripTopology topology)
{
    require_ladder(spec, topology);
    ColumnChecks checks(spec.k);
    std::vector<int> pins = initial_pins(spec);
    Sweep first = run(spec, topology, checks, pins, true);
    SolveResult result;
    if (first.value >= kInf)
        return result;
    const int opt = first.value;
    std::vector<int> witness = pairs_to_ranks(first.pairs);

    // Pin vertices in id order to the smallest label that keeps the optimum.
    for (int v = 0; v < spec.graph.order(); ++v) {
        auto& slot = pins[static_cast<std::size_t>(v)];
        if (slot >= 0)
            continue;
        for (int r = 0; r < witness[static_cast<std::size_t>(v)]; ++r) {
            slot = r;
            Sweep s = run(spec, topology, checks, pins, true);
            if (s.value == opt) {
                witness = pairs_to_ranks(s.pairs);
                break;
            }
        }
        slot = witness[static_cast<std::size_t>(v)];
    }

    std::vector<Label> labels;
    labels.reserve(witness.size());
    for (int r : witness)
        labels.push_back(kLabels[static_cast<std::size_t>(r)]);
    result.status = SolveStatus::Optimal;
    result.min_weight = opt;
    result.witness = Labeling(std::move(labels));
    return result;
}

} // namespace sdrd
