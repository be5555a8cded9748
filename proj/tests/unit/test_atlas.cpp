#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "sdrd/atlas.hpp"
#include "sdrd/solver.hpp"

using namespace sdrd;

namespace {

const Atlas& shared_atlas()
{
    static const Atlas atlas = build_atlas(4);
    return atlas;
}

Constellation nth_constellation(int code)
{
    Constellation c{};
    for (int i = 0; i < 8; ++i) {
        c[static_cast<std::size_t>(i)] = kLabels[static_cast<std::size_t>(code % 4)];
        code /= 4;
    }
    return c;
}

// Block spec assembled from vertex names only.
SolveSpec block_spec(BlockVariant variant, const Constellation& c)
{
    SolveSpec s(build_block_graph(variant));
    const Graph& g = s.graph;
    for (std::size_t i = 0; i < 8; ++i)
        s.fix(*g.id(slot_names()[i]), c[i]);
    for (const char* corner : {"l_t", "l_b", "r_t", "r_b"})
        s.exempt_vertex(*g.id(corner));
    std::vector<int> center;
    for (int v = 0; v < g.order(); ++v)
        if (g.name(v).rfind("u_", 0) == 0 || g.name(v).rfind("v_", 0) == 0)
            center.push_back(v);
    s.objective_only(center);
    return s;
}

std::optional<int> value_of(const SolveResult& r)
{
    return r.optimal() ? std::optional<int>(r.min_weight) : std::nullopt;
}

} // namespace

TEST_CASE("matrix view round trip")
{
    Constellation c = constellation_from_values({1, -1, 2, -1, -1, 1, -1, 3});
    BoundaryMatrix m = to_matrix(c);
    CHECK(m.top == std::array<int, 4>{1, -1, -1, 1});
    CHECK(m.bottom == std::array<int, 4>{2, -1, -1, 3});
    CHECK(from_matrix(m) == c);
    CHECK(format(c) == "<1,-1,2,-1,-1,1,-1,3>");
    CHECK_THROWS(constellation_from_values({0, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("property: the four symmetries form a group")
{
    for (int code = 0; code < 65536; ++code) {
        Constellation c = nth_constellation(code);
        auto o = orbit(c);
        CHECK(o[0] == c);
        Constellation canon = canonical_constellation(c);
        CHECK(canon == *std::min_element(o.begin(), o.end()));
        for (const Constellation& img : o) {
            auto back = orbit(img);
            // Each generator is an involution and the orbit is closed.
            CHECK(std::is_permutation(back.begin(), back.end(), o.begin()));
            CHECK(canonical_constellation(img) == canon);
            CHECK(passes_side_filter(img) == passes_side_filter(c));
        }
    }
}

TEST_CASE("orbit counts")
{
    CHECK(count_orbits() == 16576);
    auto all = enumerate_constellations();
    CHECK(all.size() == 14940);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<Constellation> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const Constellation& c : all) {
        CHECK(canonical_constellation(c) == c);
        CHECK(passes_side_filter(c));
    }
}

TEST_CASE("property: block values are invariant under the symmetries")
{
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        Constellation c = nth_constellation(static_cast<int>(rng() % 65536));
        for (BlockVariant v : {BlockVariant::Full, BlockVariant::Reduced}) {
            auto base = solve_block(c, v);
            for (const Constellation& img : orbit(c))
                CHECK(solve_block(img, v) == base);
        }
    }
}

TEST_CASE("property: block values agree with independent solvers")
{
    std::mt19937 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        Constellation c = nth_constellation(static_cast<int>(rng() % 65536));
        INFO(format(c));
        CHECK(solve_block(c, BlockVariant::Full) == value_of(solve_bnb(block_spec(BlockVariant::Full, c))));
        CHECK(solve_block(c, BlockVariant::Reduced) == value_of(brute_force(block_spec(BlockVariant::Reduced, c))));
    }
}

TEST_CASE("built atlas")
{
    const Atlas& atlas = shared_atlas();
    REQUIRE(atlas.size() == 14940);
    int best = 1000;
    for (const BlockRecord& r : atlas.records()) {
        CHECK(canonical_constellation(r.d) == r.d);
        if (r.minweight_C) {
            best = std::min(best, *r.minweight_C);
            if (*r.minweight_C == 6 || *r.minweight_C == 7 || *r.minweight_C == 9)
                CHECK(r.delta() == 4);
        }
        CHECK(atlas.find(r.d) == &r);
    }
    CHECK(best == 6);

    Constellation c = constellation_from_values({3, 3, -1, 1, 1, 2, -1, -1});
    const BlockRecord* rec = atlas.find(c);
    REQUIRE(rec != nullptr);
    CHECK(rec->d == canonical_constellation(c));
    CHECK(lookup_or_solve(c, atlas) == *rec);

    Constellation outside = constellation_from_values({-1, -1, -1, 1, 1, 1, 1, 1});
    CHECK(atlas.find(outside) == nullptr);
    BlockRecord solved = lookup_or_solve(outside, atlas);
    CHECK(solved.minweight_C == solve_block(outside, BlockVariant::Full));
}

TEST_CASE("atlas queries")
{
    const Atlas& atlas = shared_atlas();
    auto pinned = query_atlas(atlas, orbit_matches(right_pinned_pattern()));
    CHECK(pinned.size() == 129);
    for (const BlockRecord& r : pinned)
        CHECK(r.delta() == 4);
    CHECK(subcase_records(atlas).size() == 5);

    Pattern p = parse_pattern("*,*,-1,*,3,*,*,2");
    CHECK_FALSE(p[0].has_value());
    CHECK(p[2] == Label::MinusOne);
    CHECK(p[7] == Label::Two);
    CHECK_THROWS(parse_pattern("1,2,3"));
    CHECK_THROWS(parse_pattern("1,2,3,4,1,1,1,1"));

    auto six = query_atlas(atlas, minweight_equals(6));
    CHECK_FALSE(six.empty());
    CHECK(query_atlas(atlas, delta_at_least(4)).size() >= query_atlas(atlas, delta_equals(4)).size());
}

TEST_CASE("shifted families")
{
    const Atlas& atlas = shared_atlas();
    FamilyCheck a = check_family_one_three(atlas);
    CHECK(a.completions == 512);
    CHECK(a.realizable == 288);
    CHECK(a.holds());
    FamilyCheck b = check_family_inner_sum(atlas);
    CHECK(b.completions == 2048);
    CHECK(b.realizable == 1152);
    CHECK(b.holds());
}

TEST_CASE("CSV round trip")
{
    const Atlas& atlas = shared_atlas();
    std::string csv = atlas_to_csv(atlas);
    CHECK(csv.rfind("d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n", 0) == 0);
    CHECK(atlas_from_csv(csv) == atlas);
}

TEST_CASE("CSV parser rejects malformed input")
{
    const std::string header = "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n";
    const std::string good = "-1,-1,1,1,-1,-1,1,1,14,10,4\n";
    CHECK(atlas_from_csv(header + good).size() == 1);
    CHECK_THROWS(atlas_from_csv("bad header\n" + good));
    CHECK_THROWS(atlas_from_csv(header + "-1,-1,1,1,-1,-1,1,1,14,10\n"));
    CHECK_THROWS(atlas_from_csv(header + "-1,-1,1,1,-1,-1,1,1,14,10,3\n"));
    CHECK_THROWS(atlas_from_csv(header + "-1,-1,1,1,-1,-1,1,0,14,10,4\n"));
    CHECK_THROWS(atlas_from_csv(header + "1,1,-1,-1,1,1,-1,-1,14,10,4\n"));
    CHECK_THROWS(atlas_from_csv(header + good + good));
    CHECK_THROWS(atlas_from_csv(header + "-1,-1,1,1,-1,-1,1,x,14,10,4\n"));
}
