#include "sdrd/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "sdrd/solver.hpp"

namespace sdrd {

int lower_bound_cubic(int n)
{
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cubic graphs have even order >= 4 (got " + std::to_string(n) + ")");
    return n % 4 == 0 ? n / 2 : n / 2 + 1;
}

int ChargeVector::total() const
{
    return std::accumulate(quarter_charges.begin(), quarter_charges.end(), 0);
}

int ChargeVector::min() const
{
    return quarter_charges.empty() ? 0 : *std::min_element(quarter_charges.begin(), quarter_charges.end());
}

ChargeVector discharge(const Graph& g, const Labeling& lab)
{
    if (!g.is_cubic())
        throw std::invalid_argument("discharging needs a cubic graph");
    if (lab.size() != g.order() || !is_valid(g, lab.labels(), 1, {}))
        throw std::invalid_argument("discharging needs a valid SDRDF");

    ChargeVector c;
    c.quarter_charges.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        c.quarter_charges[static_cast<std::size_t>(v)] = 4 * lab.value_at(v);
    const int expected = 4 * weight(lab);

    struct Rule {
        Label sender;
        int quarters;
    };
    for (Rule rule : {Rule{Label::One, 1}, Rule{Label::Two, 3}, Rule{Label::Three, 5}}) {
        for (int v = 0; v < g.order(); ++v) {
            if (lab[v] != rule.sender)
                continue;
            for (int w : g.neighbors(v)) {
                if (lab[w] != Label::MinusOne)
                    continue;
                c.quarter_charges[static_cast<std::size_t>(v)] -= rule.quarters;
                c.quarter_charges[static_cast<std::size_t>(w)] += rule.quarters;
            }
        }
        if (c.total() != expected)
            throw std::logic_error("charge not conserved");
    }
    return c;
}

bool verify_discharge_certificate(const Graph& g, const Labeling& lab)
{
    ChargeVector c = discharge(g, lab);
    return c.min() >= 2 && c.total() == 4 * weight(lab);
}

namespace {

int threshold(int deg, int num, int den)
{
    return (num * deg + den - 1) / den;
}

void check_alpha(int num, int den)
{
    if (num <= 0 || den <= 0 || num > den)
        throw std::invalid_argument("alpha must be a fraction in (0, 1]");
}

class AlphaSearch {
public:
    AlphaSearch(const Graph& g, int num, int den) : g_(g), state_(static_cast<std::size_t>(g.order()), kUndecided)
    {
        const int n = g.order();
        need_out_.resize(static_cast<std::size_t>(n));
        in_nb_.assign(static_cast<std::size_t>(n), 0);
        open_nb_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            need_out_[static_cast<std::size_t>(v)] = threshold(g.degree(v), num, den);
            open_nb_[static_cast<std::size_t>(v)] = g.degree(v);
        }
        best_ = n + 1;
    }

    std::vector<int> run()
    {
        dfs(0, 0);
        return best_set_;
    }

private:
    static constexpr int kUndecided = -1;

    bool vertex_ok(int v) const
    {
        const auto i = static_cast<std::size_t>(v);
        const int reach = in_nb_[i] + open_nb_[i];
        switch (state_[i]) {
        case 1:
            return reach >= 1;
        case 0:
            return reach >= need_out_[i];
        default:
            return reach >= std::min(1, need_out_[i]);
        }
    }

    bool local_ok(int v) const
    {
        if (!vertex_ok(v))
            return false;
        for (int w : g_.neighbors(v))
            if (!vertex_ok(w))
                return false;
        return true;
    }

    void decide(int v, int s)
    {
        state_[static_cast<std::size_t>(v)] = s;
        for (int w : g_.neighbors(v)) {
            --open_nb_[static_cast<std::size_t>(w)];
            in_nb_[static_cast<std::size_t>(w)] += s;
        }
    }

    void undo(int v)
    {
        const int s = state_[static_cast<std::size_t>(v)];
        for (int w : g_.neighbors(v)) {
            ++open_nb_[static_cast<std::size_t>(w)];
            in_nb_[static_cast<std::size_t>(w)] -= s;
        }
        state_[static_cast<std::size_t>(v)] = kUndecided;
    }

    void dfs(int v, int size)
    {
        if (size >= best_)
            return;
        if (v == g_.order()) {
            best_ = size;
            best_set_.clear();
            for (int w = 0; w < g_.order(); ++w)
                if (state_[static_cast<std::size_t>(w)] == 1)
                    best_set_.push_back(w);
            return;
        }
        for (int s : {0, 1}) {
            decide(v, s);
            if (local_ok(v))
                dfs(v + 1, size + s);
            undo(v);
        }
    }

    const Graph& g_;
    std::vector<int> state_;
    std::vector<int> need_out_;
    std::vector<int> in_nb_;
    std::vector<int> open_nb_;
    int best_ = 0;
    std::vector<int> best_set_;
};

} // namespace

bool is_alpha_total_dominating(const Graph& g, const std::vector<int>& s, int alpha_num, int alpha_den)
{
    check_alpha(alpha_num, alpha_den);
    VertexMask in = mask_of(g.order(), s);
    for (int v = 0; v < g.order(); ++v) {
        int count = 0;
        for (int w : g.neighbors(v))
            count += in[static_cast<std::size_t>(w)];
        const int need = in[static_cast<std::size_t>(v)] ? 1 : threshold(g.degree(v), alpha_num, alpha_den);
        if (count < need)
            return false;
    }
    return true;
}

std::vector<int> alpha_total_dom_min(const Graph& g, int alpha_num, int alpha_den)
{
    check_alpha(alpha_num, alpha_den);
    const int limit = bnb_size_limit();
    if (g.order() > limit)
        throw SizeLimitExceeded("alpha-total domination search is limited to " + std::to_string(limit) + " vertices");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("isolated vertex has no total dominating set");
    return AlphaSearch(g, alpha_num, alpha_den).run();
}

Labeling sd2rdf_from_set(const Graph& g, const std::vector<int>& s)
{
    if (!g.is_cubic())
        throw std::invalid_argument("graph is not cubic");
    if (!is_alpha_total_dominating(g, s, 2, 3))
        throw std::invalid_argument("set is not 2/3-total dominating");
    Labeling lab = Labeling::uniform(g.order(), Label::MinusOne);
    for (int v : s)
        lab.set(v, Label::Two);
    return lab;
}

std::string Rational::str() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Rational reduced(long num, long den)
{
    long d = std::gcd(num, den);
    return {num / d, den / d};
}

} // namespace

BoundReport bound_report(const Graph& g, int k)
{
    if (!g.is_cubic())
        throw std::invalid_argument("bound report needs a cubic graph");
    if (k < 1)
        throw std::invalid_argument("threshold k must be >= 1");
    BoundReport r;
    r.n = g.order();
    r.k = k;
    r.lower_cubic = lower_bound_cubic(r.n);
    r.lower_k = (k * r.n + 3) / 4;
    r.upper_k = reduced(13L * r.n, 8);
    r.upper_alpha = reduced(5L * r.n, 4);
    return r;
}

std::string BoundReport::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["lower_cubic"] = lower_cubic ? nlohmann::ordered_json(*lower_cubic) : nlohmann::ordered_json(nullptr);
    j["lower_k"] = lower_k;
    j["upper_k"] = {{"exact", upper_k.str()}, {"value", upper_k.value()}};
    j["upper_alpha"] = {{"exact", upper_alpha.str()}, {"value", upper_alpha.value()}, {"strict", true}};
    return j.dump(2);
}

} // namespace sdrd
