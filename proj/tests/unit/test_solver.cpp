#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "sdrd/bounds.hpp"
#include "sdrd/reproduce.hpp"
#include "sdrd/solver.hpp"

using namespace sdrd;

namespace {

void check_witness(const SolveSpec& spec, const SolveResult& r)
{
    REQUIRE(r.optimal());
    CHECK(validate(spec.graph, r.witness, spec.k, spec.exempt).valid);
    int w = 0;
    for (int v = 0; v < spec.graph.order(); ++v) {
        if (spec.in_objective(v))
            w += r.witness.value_at(v);
        if (spec.is_fixed(v))
            CHECK(r.witness[v] == *spec.fixed[static_cast<std::size_t>(v)]);
    }
    CHECK(w == r.min_weight);
}

void check_same(const SolveResult& a, const SolveResult& b)
{
    REQUIRE(a.status == b.status);
    if (a.optimal()) {
        CHECK(a.min_weight == b.min_weight);
        CHECK(a.witness == b.witness);
    }
}

SolveSpec random_ladder_spec(const Graph& g, std::mt19937& rng)
{
    SolveSpec s(g);
    const int n = g.order();
    const int w = n / 2;
    // Pin the end columns and exempt the corners, like a block solve.
    if (rng() % 2) {
        for (int v : {0, w - 1, w, n - 1})
            s.exempt_vertex(v);
    }
    for (int i = 0; i < 3; ++i)
        if (rng() % 2)
            s.fix(static_cast<int>(rng() % static_cast<unsigned>(n)), kLabels[rng() % 4]);
    if (rng() % 3 == 0)
        s.k = 2;
    return s;
}

} // namespace

TEST_CASE("known optima")
{
    CHECK(solve_bnb(SolveSpec(build_grid(2, 3))).min_weight == 2);
    CHECK(solve_bnb(SolveSpec(build_petersen(5, 1))).min_weight == 7);
    CHECK(solve_strip_dp(SolveSpec(build_grid(2, 9)), StripTopology::Open).min_weight == 10);
    CHECK(solve_strip_dp(SolveSpec(build_grid(2, 11)), StripTopology::Open).min_weight == 11);
    CHECK(solve_strip_dp(SolveSpec(build_petersen(9, 1)), StripTopology::Cyclic).min_weight == 11);
    CHECK(brute_force(SolveSpec(build_grid(2, 5))).min_weight == 6);
    CHECK(brute_force(SolveSpec(build_grid(2, 1))).min_weight == 2);
}

TEST_CASE("K4 against exhaustive enumeration")
{
    Graph k4 = build_complete(4);
    const int expected = oracle::exhaustive_min(k4);
    CHECK(solve_bnb(SolveSpec(k4)).min_weight == expected);
    CHECK(brute_force(SolveSpec(k4)).min_weight == expected);
    for (int k = 2; k <= 5; ++k) {
        SolveSpec s(k4);
        s.k = k;
        CHECK(solve_bnb(s).min_weight == oracle::exhaustive_min(k4, k));
    }
}

TEST_CASE("brute force against the independent oracle")
{
    for (const NamedGraph& ng : cubic_corpus(8))
        CHECK(brute_force(SolveSpec(ng.graph)).min_weight == oracle::exhaustive_min(ng.graph));
    CHECK(brute_force(SolveSpec(build_grid(2, 4))).min_weight == oracle::exhaustive_min(build_grid(2, 4)));
}

TEST_CASE("brute force equals branch and bound on P(3,1)")
{
    SolveSpec s(build_petersen(3, 1));
    check_same(brute_force(s), solve_bnb(s));
}

TEST_CASE("size limits are explicit refusals")
{
    CHECK_THROWS_AS(brute_force(SolveSpec(build_petersen(8, 1))), SizeLimitExceeded);
    CHECK_THROWS_AS(solve_bnb(SolveSpec(build_petersen(14, 1))), SizeLimitExceeded);
    CHECK_THROWS_AS(solve_bnb(SolveSpec(build_petersen(9, 1)), 12), SizeLimitExceeded);

    setenv("SDRD_SIZE_LIMIT", "10", 1);
    CHECK(bnb_size_limit() == 10);
    CHECK_THROWS_AS(solve_bnb(SolveSpec(build_petersen(6, 1))), SizeLimitExceeded);
    setenv("SDRD_SIZE_LIMIT", "garbage", 1);
    CHECK(bnb_size_limit() == kDefaultBnbLimit);
    unsetenv("SDRD_SIZE_LIMIT");
    CHECK(bnb_size_limit() == kDefaultBnbLimit);
}

TEST_CASE("ladder detection")
{
    CHECK(is_ladder(build_grid(2, 7), StripTopology::Open));
    CHECK_FALSE(is_ladder(build_grid(2, 7), StripTopology::Cyclic));
    CHECK(is_ladder(build_petersen(7, 1), StripTopology::Cyclic));
    CHECK_FALSE(is_ladder(build_petersen(7, 2), StripTopology::Cyclic));
    CHECK(is_ladder(build_block_graph(BlockVariant::Full), StripTopology::Open));
    CHECK_FALSE(is_ladder(build_grid(3, 4), StripTopology::Open));
    CHECK_THROWS_AS(solve_strip_dp(SolveSpec(build_petersen(7, 2)), StripTopology::Cyclic), std::invalid_argument);
    CHECK_THROWS_AS(solve_strip_dp(SolveSpec(build_grid(3, 3)), StripTopology::Open), std::invalid_argument);
}

TEST_CASE("infeasible specs are reported, not thrown")
{
    SolveSpec s(build_grid(2, 4));
    for (int v : {0, 1, 4, 5})
        s.fix(v, Label::MinusOne);
    CHECK(solve_bnb(s).status == SolveStatus::Infeasible);
    CHECK(brute_force(s).status == SolveStatus::Infeasible);
    CHECK(solve_strip_dp(s, StripTopology::Open).status == SolveStatus::Infeasible);
    CHECK_FALSE(strip_dp_value(s, StripTopology::Open).has_value());
}

TEST_CASE("spec checks")
{
    SolveSpec s(build_grid(2, 3));
    s.k = 0;
    CHECK_THROWS_AS(solve_bnb(s), std::invalid_argument);
    SolveSpec t(build_grid(2, 3));
    CHECK_THROWS_AS(t.fix(6, Label::Two), std::out_of_range);
    t.exempt = VertexMask(2, false);
    CHECK_THROWS_AS(brute_force(t), std::invalid_argument);
}

TEST_CASE("oracle agreement on the small corpus")
{
    for (const NamedGraph& ng : cubic_corpus(10)) {
        SolveSpec s(ng.graph);
        SolveResult b = brute_force(s);
        check_same(b, solve_bnb(s));
        check_witness(s, b);
    }
    for (int m = 1; m <= 6; ++m) {
        SolveSpec s(build_grid(2, m));
        SolveResult b = brute_force(s);
        check_same(b, solve_bnb(s));
        check_same(b, solve_strip_dp(s, StripTopology::Open));
    }
}

TEST_CASE("property: strip DP equals branch and bound with pins and exemptions")
{
    std::mt19937 rng(31337);
    for (int m = 2; m <= 10; ++m)
        for (int rep = 0; rep < 6; ++rep) {
            SolveSpec s = random_ladder_spec(build_grid(2, m), rng);
            SolveResult dp = solve_strip_dp(s, StripTopology::Open);
            check_same(dp, solve_bnb(s));
            if (dp.optimal())
                check_witness(s, dp);
        }
    for (int m = 3; m <= 6; ++m)
        for (int rep = 0; rep < 6; ++rep) {
            SolveSpec s = random_ladder_spec(build_petersen(m, 1), rng);
            SolveResult dp = solve_strip_dp(s, StripTopology::Cyclic);
            check_same(dp, solve_bnb(s));
            if (dp.optimal())
                check_witness(s, dp);
        }
}

TEST_CASE("property: objective subsets")
{
    std::mt19937 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        SolveSpec s(build_grid(2, 6));
        std::vector<int> subset;
        for (int v = 0; v < 12; ++v)
            if (rng() % 2)
                subset.push_back(v);
        s.objective_only(subset);
        SolveResult b = brute_force(s);
        check_same(b, solve_bnb(s));
        check_same(b, solve_strip_dp(s, StripTopology::Open));
        check_witness(s, b);
    }
}

TEST_CASE("property: minimum weight is non-decreasing in k")
{
    for (const NamedGraph& ng : cubic_corpus(10)) {
        int previous = -1000;
        for (int k = 1; k <= 6; ++k) {
            SolveSpec s(ng.graph);
            s.k = k;
            SolveResult r = solve_bnb(s);
            check_witness(s, r);
            CHECK(r.min_weight >= previous);
            previous = r.min_weight;
        }
    }
}

TEST_CASE("property: cubic optima respect the cubic lower bound")
{
    for (const NamedGraph& ng : cubic_corpus(12))
        CHECK(solve_bnb(SolveSpec(ng.graph)).min_weight >= lower_bound_cubic(ng.graph.order()));
    for (int m = 3; m <= 13; ++m)
        CHECK(*strip_dp_value(SolveSpec(build_petersen(m, 1)), StripTopology::Cyclic) >= lower_bound_cubic(2 * m));
}

TEST_CASE("results are deterministic")
{
    SolveSpec s(build_petersen(8, 3));
    SolveResult a = solve_bnb(s);
    SolveResult b = solve_bnb(s);
    CHECK(a.witness == b.witness);
    check_witness(s, a);
}
