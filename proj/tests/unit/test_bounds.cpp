#include <doctest.h>

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "oracle.hpp"
#include "sdrd/bounds.hpp"
#include "sdrd/constructions.hpp"
#include "sdrd/reproduce.hpp"
#include "sdrd/solver.hpp"

using namespace sdrd;

TEST_CASE("cubic lower bound")
{
    CHECK(lower_bound_cubic(4) == 2);
    CHECK(lower_bound_cubic(6) == 4);
    CHECK(lower_bound_cubic(20) == 10);
    CHECK(lower_bound_cubic(22) == 12);
    CHECK_THROWS_AS(lower_bound_cubic(7), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_cubic(2), std::invalid_argument);
}

TEST_CASE("discharge: no -1 labels means no transfers")
{
    Graph k4 = build_complete(4);
    ChargeVector c = discharge(k4, Labeling::uniform(4, Label::Two));
    CHECK(c.quarter_charges == std::vector<int>{8, 8, 8, 8});
    CHECK(c.total() == 32);
}

TEST_CASE("discharge: hand-checked prism labeling")
{
    Graph g = build_petersen(4, 1);
    Labeling lab = petersen_even_odd(4, 1);
    // Each 2 sends 3 quarters to each of its two -1 neighbors; each -1 gets 6.
    ChargeVector c = discharge(g, lab);
    CHECK(c.quarter_charges == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(c.total() == 4 * weight(lab));
    CHECK(c.min() == 2);
    CHECK(verify_discharge_certificate(g, lab));
}

TEST_CASE("discharge rejects bad input")
{
    CHECK_THROWS_AS(discharge(build_grid(2, 4), grid_2xm(5)), std::invalid_argument);
    Graph k4 = build_complete(4);
    CHECK_THROWS_AS(discharge(k4, Labeling::uniform(4, Label::MinusOne)), std::invalid_argument);
    CHECK_THROWS_AS(discharge(build_grid(2, 3), Labeling::uniform(6, Label::Two)), std::invalid_argument);
}

TEST_CASE("property: every valid labeling on small cubic graphs carries a certificate")
{
    for (const NamedGraph& ng : cubic_corpus(8)) {
        const int n = ng.graph.order();
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i)
            total *= 4;
        int seen = 0;
        for (std::uint64_t code = 0; code < total; code += 7) {
            std::vector<int> f = oracle::decode(code, n);
            if (!oracle::valid(ng.graph, f))
                continue;
            ++seen;
            Labeling lab = Labeling::from_values(f);
            ChargeVector c = discharge(ng.graph, lab);
            CHECK(c.min() >= 2);
            CHECK(c.total() == 4 * weight(lab));
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("alpha total domination")
{
    Graph k4 = build_complete(4);
    CHECK(is_alpha_total_dominating(k4, {0, 1}));
    CHECK_FALSE(is_alpha_total_dominating(k4, {0}));
    CHECK(alpha_total_dom_min(k4).size() == 2);
    for (const NamedGraph& ng : cubic_corpus(12)) {
        std::vector<int> s = alpha_total_dom_min(ng.graph);
        INFO(ng.name);
        CHECK(is_alpha_total_dominating(ng.graph, s));
        CHECK(static_cast<int>(s.size()) == oracle::exhaustive_alpha_min(ng.graph));
        Labeling lab = sd2rdf_from_set(ng.graph, s);
        CHECK(validate(ng.graph, lab, 1).valid);
        CHECK(weight(lab) == 3 * static_cast<int>(s.size()) - ng.graph.order());
        CHECK(4 * weight(lab) < 5 * ng.graph.order());
    }
}

TEST_CASE("sd2rdf from a set")
{
    Graph g = build_petersen(4, 1);
    std::vector<int> s = {1, 3, 5, 7};
    CHECK(sd2rdf_from_set(g, s) == petersen_even_odd(4, 1));
    CHECK_THROWS_AS(sd2rdf_from_set(g, {0}), std::invalid_argument);
}

TEST_CASE("bound report")
{
    BoundReport r = bound_report(build_petersen(8, 3), 1);
    CHECK(r.n == 16);
    CHECK(r.lower_cubic == 8);
    CHECK(r.lower_k == 4);
    CHECK(r.upper_k.str() == "26/1");
    CHECK(r.upper_alpha.value() == doctest::Approx(20.0));

    BoundReport r3 = bound_report(build_petersen(5, 2), 3);
    CHECK(r3.lower_k == 8);
    CHECK(r3.upper_k.str() == "65/4");

    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["n"] == 16);
    CHECK(j["upper_alpha"]["strict"] == true);
    CHECK(j["upper_k"]["exact"] == "26/1");
}

TEST_CASE("property: k-threshold sandwich on the corpus")
{
    for (const NamedGraph& ng : cubic_corpus(10))
        for (int k = 1; k <= 5; ++k) {
            SolveSpec s(ng.graph);
            s.k = k;
            const int best = solve_bnb(s).min_weight;
            BoundReport r = bound_report(ng.graph, k);
            CHECK(best >= r.lower_k);
            CHECK(best >= *r.lower_cubic);
            CHECK(static_cast<double>(best) <= r.upper_k.value());
        }
}
