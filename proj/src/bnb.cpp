#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <memory>
#include <unordered_map>

#include "sdrd/solver.hpp"

namespace sdrd {

namespace {

constexpr int kUnassigned = 4;
constexpr int kInfeasible = INT_MAX / 4;
constexpr std::array<int, 4> kValueByRank = {-1, 1, 2, 3};
// Quarter-units a positive label hands to each (-1)-neighbor.
constexpr std::array<int, 4> kSendByRank = {0, 1, 3, 5};

int ceil_quarter(long long q)
{
    return static_cast<int>(q >= 0 ? (q + 3) / 4 : -((-q) / 4));
}

// Memoized "best local charge" per neighborhood signature. The bound is a
// sum over vertices of the smallest charge a vertex can end with after the
// quarter-unit redistribution, taken over all completions of its closed
// neighborhood that satisfy its own conditions. Total charge equals total
// objective weight, so the sum is a valid lower bound.
class LocalTable {
public:
    explicit LocalTable(int k) : k_(k) {}

    struct Signature {
        int self;                  // rank or kUnassigned
        std::array<int, 4> in{};   // assigned objective neighbors by rank
        int in_free = 0;           // unassigned objective neighbors
        std::array<int, 4> out{};  // assigned non-objective neighbors by rank
        int out_free = 0;
        bool exempt = false;
        bool objective = false;
    };

    int lookup(const Signature& s)
    {
        std::uint64_t key = static_cast<std::uint64_t>(s.self);
        auto push = [&key](int x, int bits) { key = (key << bits) | static_cast<std::uint64_t>(x); };
        for (int r = 0; r < 4; ++r)
            push(s.in[static_cast<std::size_t>(r)], 4);
        push(s.in_free, 4);
        for (int r = 0; r < 4; ++r)
            push(s.out[static_cast<std::size_t>(r)], 4);
        push(s.out_free, 4);
        push(s.exempt, 1);
        push(s.objective, 1);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        int v = compute(s);
        memo_.emplace(key, v);
        return v;
    }

private:
    int compute(const Signature& s) const
    {
        int best = kInfeasible;
        const int lo = s.self == kUnassigned ? 0 : s.self;
        const int hi = s.self == kUnassigned ? 3 : s.self;
        std::array<int, 4> a{};
        std::array<int, 4> b{};
        for (int self = lo; self <= hi; ++self)
            for (a[0] = 0; a[0] <= s.in_free; ++a[0])
                for (a[1] = 0; a[0] + a[1] <= s.in_free; ++a[1])
                    for (a[2] = 0; a[0] + a[1] + a[2] <= s.in_free; ++a[2]) {
                        a[3] = s.in_free - a[0] - a[1] - a[2];
                        for (b[0] = 0; b[0] <= s.out_free; ++b[0])
                            for (b[1] = 0; b[0] + b[1] <= s.out_free; ++b[1])
                                for (b[2] = 0; b[0] + b[1] + b[2] <= s.out_free; ++b[2]) {
                                    b[3] = s.out_free - b[0] - b[1] - b[2];
                                    int charge = evaluate(s, self, a, b);
                                    best = std::min(best, charge);
                                }
                    }
        return best;
    }

    int evaluate(const Signature& s, int self, const std::array<int, 4>& a, const std::array<int, 4>& b) const
    {
        std::array<int, 4> in{};
        std::array<int, 4> total{};
        for (std::size_t r = 0; r < 4; ++r) {
            in[r] = s.in[r] + a[r];
            total[r] = in[r] + s.out[r] + b[r];
        }
        if (!s.exempt) {
            int sum = kValueByRank[static_cast<std::size_t>(self)];
            for (std::size_t r = 0; r < 4; ++r)
                sum += total[r] * kValueByRank[r];
            if (sum < k_)
                return kInfeasible;
            if (self == 0 && total[3] == 0 && total[2] < 2)
                return kInfeasible;
            if (self == 1 && total[2] + total[3] == 0)
                return kInfeasible;
        }
        if (!s.objective)
            return 0;
        int charge = 4 * kValueByRank[static_cast<std::size_t>(self)];
        if (self == 0) {
            for (std::size_t r = 1; r < 4; ++r)
                charge += in[r] * kSendByRank[r];
        } else {
            charge -= in[0] * kSendByRank[static_cast<std::size_t>(self)];
        }
        return charge;
    }

    int k_;
    std::unordered_map<std::uint64_t, int> memo_;
};

class Search {
public:
    Search(const SolveSpec& spec, std::vector<int> pinned, LocalTable& table)
        : g_(spec.graph), n_(g_.order()), table_(table)
    {
        exempt_.resize(static_cast<std::size_t>(n_));
        objective_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            exempt_[static_cast<std::size_t>(v)] = spec.is_exempt(v);
            objective_[static_cast<std::size_t>(v)] = spec.in_objective(v);
        }
        state_.assign(static_cast<std::size_t>(n_), kUnassigned);
        sig_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            auto& s = sig_[static_cast<std::size_t>(v)];
            s.self = kUnassigned;
            s.exempt = exempt_[static_cast<std::size_t>(v)];
            s.objective = objective_[static_cast<std::size_t>(v)];
            for (int w : g_.neighbors(v))
                (objective_[static_cast<std::size_t>(w)] ? s.in_free : s.out_free)++;
        }
        local_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) {
            int l = table_.lookup(sig_[static_cast<std::size_t>(v)]);
            local_[static_cast<std::size_t>(v)] = l;
            account(l, +1);
        }
        for (int v = 0; v < n_; ++v)
            if (pinned[static_cast<std::size_t>(v)] != kUnassigned)
                assign(v, pinned[static_cast<std::size_t>(v)]);
        build_order();
    }

    /// Best objective strictly below `bound`, or nothing.
    std::optional<std::pair<int, std::vector<int>>> minimize(int bound)
    {
        bound_ = bound;
        stop_at_first_ = false;
        found_ = false;
        if (infeasible_ == 0)
            dfs(0);
        if (!found_)
            return std::nullopt;
        return std::make_pair(best_weight_, best_);
    }

    /// Any labeling with objective <= limit.
    std::optional<std::vector<int>> find_at_most(int limit)
    {
        bound_ = limit + 1;
        stop_at_first_ = true;
        found_ = false;
        if (infeasible_ == 0)
            dfs(0);
        if (!found_)
            return std::nullopt;
        return best_;
    }

private:
    void account(int local, int sign)
    {
        if (local >= kInfeasible)
            infeasible_ += sign;
        else
            lb_q_ += sign * local;
    }

    void refresh(int v)
    {
        int l = table_.lookup(sig_[static_cast<std::size_t>(v)]);
        int& slot = local_[static_cast<std::size_t>(v)];
        if (l == slot)
            return;
        trail_.emplace_back(v, slot);
        account(slot, -1);
        slot = l;
        account(l, +1);
    }

    void assign(int v, int r)
    {
        state_[static_cast<std::size_t>(v)] = r;
        sig_[static_cast<std::size_t>(v)].self = r;
        const bool obj = objective_[static_cast<std::size_t>(v)];
        for (int w : g_.neighbors(v)) {
            auto& s = sig_[static_cast<std::size_t>(w)];
            if (obj) {
                --s.in_free;
                ++s.in[static_cast<std::size_t>(r)];
            } else {
                --s.out_free;
                ++s.out[static_cast<std::size_t>(r)];
            }
        }
        refresh(v);
        for (int w : g_.neighbors(v))
            refresh(w);
    }

    void unassign(int v, std::size_t mark)
    {
        while (trail_.size() > mark) {
            auto [w, old] = trail_.back();
            trail_.pop_back();
            int& slot = local_[static_cast<std::size_t>(w)];
            account(slot, -1);
            slot = old;
            account(old, +1);
        }
        const int r = state_[static_cast<std::size_t>(v)];
        state_[static_cast<std::size_t>(v)] = kUnassigned;
        sig_[static_cast<std::size_t>(v)].self = kUnassigned;
        const bool obj = objective_[static_cast<std::size_t>(v)];
        for (int w : g_.neighbors(v)) {
            auto& s = sig_[static_cast<std::size_t>(w)];
            if (obj) {
                ++s.in_free;
                --s.in[static_cast<std::size_t>(r)];
            } else {
                ++s.out_free;
                --s.out[static_cast<std::size_t>(r)];
            }
        }
    }

    // Most assigned neighbors first, ties by id.
    void build_order()
    {
        std::vector<char> done(static_cast<std::size_t>(n_), 0);
        std::vector<int> assigned_nb(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            if (state_[static_cast<std::size_t>(v)] != kUnassigned) {
                done[static_cast<std::size_t>(v)] = 1;
                for (int w : g_.neighbors(v))
                    ++assigned_nb[static_cast<std::size_t>(w)];
            }
        order_.clear();
        while (true) {
            int pick = -1;
            for (int v = 0; v < n_; ++v) {
                if (done[static_cast<std::size_t>(v)])
                    continue;
                if (pick < 0 || assigned_nb[static_cast<std::size_t>(v)] > assigned_nb[static_cast<std::size_t>(pick)])
                    pick = v;
            }
            if (pick < 0)
                break;
            done[static_cast<std::size_t>(pick)] = 1;
            order_.push_back(pick);
            for (int w : g_.neighbors(pick))
                ++assigned_nb[static_cast<std::size_t>(w)];
        }
    }

    bool dfs(std::size_t depth)
    {
        if (depth == order_.size()) {
            best_weight_ = static_cast<int>(lb_q_ / 4);
            best_ = state_;
            found_ = true;
            bound_ = best_weight_;
            return stop_at_first_;
        }
        const int v = order_[depth];
        for (int r = 0; r < 4; ++r) {
            const std::size_t mark = trail_.size();
            assign(v, r);
            if (infeasible_ == 0 && ceil_quarter(lb_q_) < bound_) {
                if (dfs(depth + 1))
                    return true;
            }
            unassign(v, mark);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    LocalTable& table_;
    std::vector<char> exempt_;
    std::vector<char> objective_;
    std::vector<int> state_;
    std::vector<LocalTable::Signature> sig_;
    std::vector<int> local_;
    long long lb_q_ = 0;
    int infeasible_ = 0;
    std::vector<std::pair<int, int>> trail_;
    std::vector<int> order_;

    int bound_ = INT_MAX;
    bool stop_at_first_ = false;
    bool found_ = false;
    int best_weight_ = 0;
    std::vector<int> best_;
};

Labeling to_labeling(const std::vector<int>& ranks)
{
    std::vector<Label> labels;
    labels.reserve(ranks.size());
    for (int r : ranks)
        labels.push_back(kLabels[static_cast<std::size_t>(r)]);
    return Labeling(std::move(labels));
}

} // namespace

SolveResult solve_bnb(const SolveSpec& spec)
{
    return solve_bnb(spec, bnb_size_limit());
}

SolveResult solve_bnb(const SolveSpec& spec, int size_limit)
{
    spec.check();
    const int n = spec.graph.order();
    if (n > size_limit)
        throw SizeLimitExceeded("branch and bound is limited to " + std::to_string(size_limit) +
                                " vertices (instance has " + std::to_string(n) + ")");
    if (spec.graph.max_degree() > 15)
        throw SizeLimitExceeded("branch and bound supports vertex degree up to 15");

    std::vector<int> pinned(static_cast<std::size_t>(n), kUnassigned);
    for (int v = 0; v < n; ++v)
        if (spec.is_fixed(v))
            pinned[static_cast<std::size_t>(v)] = rank(*spec.fixed[static_cast<std::size_t>(v)]);

    LocalTable table(spec.k);
    auto first = Search(spec, pinned, table).minimize(INT_MAX);
    SolveResult result;
    if (!first)
        return result;
    const int opt = first->first;
    std::vector<int> witness = std::move(first->second);

    // Walk vertices in id order and pin each one to the smallest label that
    // still admits an optimal completion.
    for (int v = 0; v < n; ++v) {
        auto& slot = pinned[static_cast<std::size_t>(v)];
        if (slot != kUnassigned)
            continue;
        for (int r = 0; r < witness[static_cast<std::size_t>(v)]; ++r) {
            slot = r;
            if (auto better = Search(spec, pinned, table).find_at_most(opt)) {
                witness = std::move(*better);
                break;
            }
        }
        slot = witness[static_cast<std::size_t>(v)];
    }

    result.status = SolveStatus::Optimal;
    result.min_weight = opt;
    result.witness = to_labeling(witness);
    return result;
}

} // namespace sdrd
