#include <doctest.h>

#include <stdexcept>

#include "sdrd/bounds.hpp"
#include "sdrd/constructions.hpp"
#include "sdrd/solver.hpp"

using namespace sdrd;

TEST_CASE("small schemes by hand")
{
    Labeling p = petersen_even_odd(4, 1);
    CHECK(p.values() == std::vector<int>{-1, 2, -1, 2, -1, 2, -1, 2});
    CHECK(weight(p) == 4);

    Labeling g = grid_2xm(5);
    CHECK(weight(g) == 6);
    CHECK(validate(build_grid(2, 5), g, 1).valid);

    CHECK(weight(flower_snark(5)) == 11);
    CHECK(weight(petersen_m1(7)) == 8);
    CHECK(weight(petersen_m3(9)) == 10);
}

TEST_CASE("predicted weights follow the residue classes")
{
    CHECK(predicted_petersen_m1(8) == 8);
    CHECK(predicted_petersen_m1(11) == 12);
    CHECK(predicted_petersen_m1(13) == 15);
    CHECK(predicted_petersen_m3(10) == 10);
    CHECK(predicted_petersen_m3(11) == 12);
    CHECK(predicted_grid_2xm(9) == 10);
    CHECK(predicted_grid_2xm(12) == 12);
    CHECK(predicted_flower_snark(7) == 15);
}

TEST_CASE("parameter errors")
{
    CHECK_THROWS_AS(petersen_even_odd(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(petersen_even_odd(8, 2), std::invalid_argument);
    CHECK_THROWS_AS(petersen_even_odd(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(petersen_m3(7), std::invalid_argument);
    CHECK_THROWS_AS(petersen_m1(2), std::invalid_argument);
    CHECK_THROWS_AS(flower_snark(4), std::invalid_argument);
    CHECK_THROWS_AS(grid_2xm(4), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme("nope", 8), std::invalid_argument);
}

TEST_CASE("property: every scheme validates at its predicted weight")
{
    for (const std::string& fam : scheme_families()) {
        for (int m = 3; m <= 200; ++m) {
            for (int k : {1, 3, 5}) {
                if (fam != "petersen-even" && k != 1)
                    continue;
                Scheme s;
                try {
                    s = make_scheme(fam, m, k);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                INFO(fam << " m=" << m << " k=" << k);
                CHECK(s.labeling.labels().size() == static_cast<std::size_t>(s.graph.order()));
                CHECK(validate(s.graph, s.labeling, 1).valid);
                CHECK(weight(s.labeling) == s.predicted_weight);
            }
        }
    }
}

TEST_CASE("property: P(m,1) scheme is periodic in the interior")
{
    // Interior columns repeat with period 4 once the end gadget is fixed.
    for (int m = 16; m <= 40; m += 4) {
        Labeling a = petersen_m1(m);
        Labeling b = petersen_m1(m + 4);
        for (int i = 0; i < m - 8; ++i) {
            CHECK(a[i] == b[i]);
            CHECK(a[m + i] == b[m + 4 + i]);
        }
    }
}

TEST_CASE("property: grid scheme matches the strip DP optimum")
{
    for (int m = 5; m <= 40; ++m) {
        auto best = strip_dp_value(SolveSpec(build_grid(2, m)), StripTopology::Open);
        REQUIRE(best.has_value());
        CHECK(*best == predicted_grid_2xm(m));
    }
}

TEST_CASE("property: prism scheme matches the cyclic DP optimum")
{
    for (int m = 3; m <= 40; ++m) {
        auto best = strip_dp_value(SolveSpec(build_petersen(m, 1)), StripTopology::Cyclic);
        REQUIRE(best.has_value());
        CHECK(*best == predicted_petersen_m1(m));
    }
}

TEST_CASE("property: even schemes meet the cubic lower bound")
{
    for (int m = 4; m <= 120; m += 4)
        for (int k : {1, 3, 5})
            if (2 * k < m)
                CHECK(weight(petersen_even_odd(m, k)) == lower_bound_cubic(2 * m));
}
