#include "sdrd/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "sdrd/bounds.hpp"
#include "sdrd/constructions.hpp"
#include "sdrd/solver.hpp"

namespace sdrd {

std::vector<NamedGraph> cubic_corpus(int max_n)
{
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, Graph g) {
        if (g.order() <= max_n)
            out.push_back({std::move(name), std::move(g)});
    };
    add("K4", build_complete(4));
    add("K33", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    for (int m = 3; 2 * m <= max_n; ++m)
        for (int k = 1; 2 * k < m; ++k)
            add("P(" + std::to_string(m) + "," + std::to_string(k) + ")", build_petersen(m, k));
    const std::vector<std::pair<int, int>> random_orders = {{8, 4}, {10, 6}, {12, 8}};
    for (auto [n, count] : random_orders)
        for (int s = 0; s < count; ++s) {
            const auto seed = static_cast<std::uint64_t>(1000 * n + s);
            add("random" + std::to_string(n) + "#" + std::to_string(s), build_random_cubic(n, seed));
        }
    return out;
}

bool ReproduceReport::all_pass() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string join(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

std::string secs(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
}

struct Context {
    const ReproduceOptions& options;
    std::optional<Atlas> atlas;
    double atlas_seconds = 0;
    bool atlas_loaded = false;

    const Atlas& get_atlas()
    {
        if (!atlas) {
            auto t = Clock::now();
            if (options.atlas_path) {
                atlas = import_atlas(*options.atlas_path);
                atlas_loaded = true;
            } else {
                atlas = build_atlas(options.jobs);
            }
            atlas_seconds = since(t);
        }
        return *atlas;
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

// --- individual criteria ---------------------------------------------------

Outcome grid_sequence(Context&)
{
    const std::vector<int> expected = {2, 4, 2, 5, 6, 6, 7, 8, 10, 10, 11, 12, 14};
    auto t = Clock::now();
    std::vector<int> got;
    for (int m = 1; m <= 13; ++m)
        got.push_back(solve_strip_dp(SolveSpec(build_grid(2, m)), StripTopology::Open).min_weight);
    const double s = since(t);
    return {got == expected && s < 1.0, "got <" + join(got) + "> in " + secs(s)};
}

Outcome grid_closed_form(Context&)
{
    auto t = Clock::now();
    int bad_scheme = 0;
    int bad_opt = 0;
    for (int m = 5; m <= 40; ++m) {
        Labeling lab = grid_2xm(m);
        Graph g = build_grid(2, m);
        if (weight(lab) != predicted_grid_2xm(m) || !validate(g, lab).valid)
            ++bad_scheme;
        if (m <= 20 && strip_dp_value(SolveSpec(g), StripTopology::Open) != predicted_grid_2xm(m))
            ++bad_opt;
    }
    const double s = since(t);
    return {bad_scheme == 0 && bad_opt == 0 && s < 30,
            "schemes m=5..40 off=" + std::to_string(bad_scheme) + ", optima m=5..20 off=" + std::to_string(bad_opt) +
                " in " + secs(s)};
}

Outcome prism_closed_form(Context&)
{
    auto t = Clock::now();
    std::vector<int> got;
    bool dp_ok = true;
    for (int m = 3; m <= 13; ++m) {
        auto v = strip_dp_value(SolveSpec(build_petersen(m, 1)), StripTopology::Cyclic);
        got.push_back(v.value_or(-1));
        dp_ok = dp_ok && v == predicted_petersen_m1(m);
    }
    int bad = 0;
    for (int m = 3; m <= 200; ++m) {
        Labeling lab = petersen_m1(m);
        if (weight(lab) != predicted_petersen_m1(m) || !validate(build_petersen(m, 1), lab).valid)
            ++bad;
    }
    const double s = since(t);
    return {dp_ok && bad == 0 && s < 60,
            "optima m=3..13 <" + join(got) + ">, schemes m<=200 off=" + std::to_string(bad) + " in " + secs(s)};
}

Outcome petersen_three(Context&)
{
    auto t = Clock::now();
    const int g8 = solve_bnb(SolveSpec(build_petersen(8, 3))).min_weight;
    const int g9 = solve_bnb(SolveSpec(build_petersen(9, 3))).min_weight;
    const double bnb_s = since(t);
    int bad = 0;
    for (int m = 8; m <= 200; ++m) {
        Labeling lab = petersen_m3(m);
        if (weight(lab) != lower_bound_cubic(2 * m) || !validate(build_petersen(m, 3), lab).valid)
            ++bad;
    }
    return {g8 == 8 && g9 == 10 && bad == 0 && bnb_s < 600,
            "P(8,3)=" + std::to_string(g8) + ", P(9,3)=" + std::to_string(g9) + " (" + secs(bnb_s) +
                "), schemes m=8..200 off lower bound=" + std::to_string(bad)};
}

Outcome discharging(Context&)
{
    auto t = Clock::now();
    int checked = 0;
    int failed = 0;
    auto check = [&](const Graph& g, const Labeling& lab) {
        ++checked;
        if (!verify_discharge_certificate(g, lab))
            ++failed;
    };
    // Every valid labeling of the small corpus graphs.
    for (const NamedGraph& ng : cubic_corpus(8)) {
        const int n = ng.graph.order();
        std::vector<Label> labels(static_cast<std::size_t>(n));
        for (long code = 0; code < 1L << (2 * n); ++code) {
            for (int v = 0; v < n; ++v)
                labels[static_cast<std::size_t>(v)] = kLabels[static_cast<std::size_t>((code >> (2 * v)) & 3)];
            if (is_valid(ng.graph, labels, 1, {}))
                check(ng.graph, Labeling(labels));
        }
    }
    for (const NamedGraph& ng : cubic_corpus(12))
        check(ng.graph, solve_bnb(SolveSpec(ng.graph)).witness);
    for (int m = 3; m <= 60; ++m)
        check(build_petersen(m, 1), petersen_m1(m));
    for (int m = 8; m <= 60; ++m)
        check(build_petersen(m, 3), petersen_m3(m));
    for (int m = 5; m <= 30; ++m)
        check(build_flower_snark(m), flower_snark(m));
    // Optima of P(7,1) under random pinned labels.
    std::mt19937 rng(7);
    const Graph p71 = build_petersen(7, 1);
    for (int i = 0; i < 60; ++i) {
        SolveSpec spec(p71);
        for (int j = 0; j < 3; ++j)
            spec.fix(static_cast<int>(rng() % 14), kLabels[rng() % 4]);
        SolveResult r = solve_bnb(spec);
        if (r.optimal())
            check(p71, r.witness);
    }
    const double s = since(t);
    return {failed == 0 && checked >= 500 && s < 10,
            std::to_string(checked) + " valid labelings, " + std::to_string(failed) + " failures, " + secs(s)};
}

Outcome parity(Context&)
{
    std::vector<NamedGraph> graphs = cubic_corpus(12);
    for (int m : {7, 9, 11})
        for (int k = 1; 2 * k < m; ++k)
            graphs.push_back({"P(" + std::to_string(m) + "," + std::to_string(k) + ")", build_petersen(m, k)});
    graphs.push_back({"P(13,3)", build_petersen(13, 3)});
    graphs.push_back({"J5", build_flower_snark(5)});
    int checked = 0;
    int parity_cases = 0;
    std::vector<std::string> failures;
    auto check = [&](const std::string& name, int n, int opt) {
        ++checked;
        if (n % 4 == 2)
            ++parity_cases;
        if (opt < lower_bound_cubic(n))
            failures.push_back(name + "=" + std::to_string(opt));
    };
    for (const NamedGraph& ng : graphs)
        check(ng.name, ng.graph.order(), solve_bnb(SolveSpec(ng.graph)).min_weight);
    for (int m = 3; m <= 13; m += 2)
        check("P(" + std::to_string(m) + ",1)", 2 * m,
              strip_dp_value(SolveSpec(build_petersen(m, 1)), StripTopology::Cyclic).value_or(-1));
    std::string detail = std::to_string(parity_cases) + " optima with n = 2 mod 4 (" + std::to_string(checked) +
                         " cubic optima total) all >= lower bound";
    if (!failures.empty()) {
        detail = "below bound:";
        for (const auto& f : failures)
            detail += " " + f;
    }
    return {failures.empty() && parity_cases > 0, detail};
}

Outcome atlas_counts(Context& ctx)
{
    const auto cs = enumerate_constellations();
    const Atlas& atlas = ctx.get_atlas();
    int min_c = -1;
    int low = 0;
    int low_delta = 0;
    int small_rows = 0;
    for (const BlockRecord& r : atlas.records()) {
        if (!r.minweight_C)
            continue;
        const int c = *r.minweight_C;
        if (min_c < 0 || c < min_c)
            min_c = c;
        if (c <= 5)
            ++low;
        if (c == 6 || c == 7 || c == 9) {
            ++small_rows;
            if (r.delta() != 4)
                ++low_delta;
        }
    }
    const bool timed_ok = ctx.atlas_loaded || ctx.atlas_seconds < 300;
    return {cs.size() == 14940 && atlas.size() == 14940 && min_c == 6 && low == 0 && low_delta == 0 && timed_ok,
            std::to_string(cs.size()) + " constellations, min minweight_C=" + std::to_string(min_c) + ", " +
                std::to_string(small_rows) + " records with minweight_C in {6,7,9}, " + std::to_string(low_delta) +
                " with delta != 4; atlas " + (ctx.atlas_loaded ? "loaded" : "built on " +
                                                                           std::to_string(ctx.options.jobs) +
                                                                           " workers") +
                " in " + secs(ctx.atlas_seconds)};
}

Outcome right_pinned(Context& ctx)
{
    auto rows = query_atlas(ctx.get_atlas(), orbit_matches(right_pinned_pattern()));
    const auto with4 = std::count_if(rows.begin(), rows.end(), [](const BlockRecord& r) { return r.delta() == 4; });
    return {rows.size() == 129 && static_cast<std::size_t>(with4) == rows.size(),
            std::to_string(rows.size()) + " records, " + std::to_string(with4) + " with delta = 4"};
}

Outcome boundary_matrices(Context& ctx)
{
    const Atlas& atlas = ctx.get_atlas();
    bool ok = true;
    std::string detail;
    for (const BoundaryClaim& claim : boundary_claims()) {
        BlockRecord r = lookup_or_solve(from_matrix(claim.matrix), atlas);
        const bool pass = !r.minweight_C || *r.minweight_C >= claim.center_lower_bound;
        ok = ok && pass;
        detail += (detail.empty() ? "" : " ") + (r.minweight_C ? std::to_string(*r.minweight_C) : std::string("inf")) +
                  ">=" + std::to_string(claim.center_lower_bound);
    }
    return {ok, detail};
}

Outcome shifted_families(Context& ctx)
{
    const Atlas& atlas = ctx.get_atlas();
    auto t = Clock::now();
    FamilyCheck a = check_family_one_three(atlas);
    FamilyCheck b = check_family_inner_sum(atlas);
    const double s = since(t);
    auto describe = [](const char* name, const FamilyCheck& f) {
        return std::string(name) + ": " + std::to_string(f.quality) + "/" + std::to_string(f.realizable) +
               " realizable completions transfer (" + std::to_string(f.completions) + " total)";
    };
    return {a.holds() && b.holds() && s < 1.0,
            describe("inner {1,3}", a) + "; " + describe("inner sum >= 3", b) + "; " + secs(s)};
}

Outcome alpha_pipeline(Context&)
{
    int checked = 0;
    std::vector<std::string> failures;
    for (const NamedGraph& ng : cubic_corpus(12)) {
        const Graph& g = ng.graph;
        const int n = g.order();
        std::vector<int> s = alpha_total_dom_min(g);
        Labeling lab = sd2rdf_from_set(g, s);
        const int size = static_cast<int>(s.size());
        const bool ok = validate(g, lab, 2).valid && validate(g, lab, 1).valid && 4 * weight(lab) < 5 * n &&
                        2 * size >= n && 4 * size < 3 * n;
        ++checked;
        if (!ok)
            failures.push_back(ng.name);
    }
    std::string detail = std::to_string(checked) + " cubic graphs";
    for (const auto& f : failures)
        detail += " FAIL:" + f;
    return {failures.empty(), detail};
}

Outcome threshold_sandwich(Context&)
{
    int checked = 0;
    std::vector<std::string> failures;
    for (const NamedGraph& ng : cubic_corpus(12)) {
        if (!ng.graph.connected())
            continue;
        const int n = ng.graph.order();
        int previous = -1000;
        for (int k = 1; k <= 5; ++k) {
            SolveSpec spec(ng.graph);
            spec.k = k;
            const int gamma = solve_bnb(spec).min_weight;
            ++checked;
            if (4 * gamma < k * n || 8 * gamma > 13 * n || gamma < previous)
                failures.push_back(ng.name + " k=" + std::to_string(k) + " gamma=" + std::to_string(gamma));
            previous = gamma;
        }
    }
    std::string detail = std::to_string(checked) + " (graph, k) pairs";
    for (const auto& f : failures)
        detail += " FAIL:" + f;
    return {failures.empty(), detail};
}

Outcome snark(Context&)
{
    int bad = 0;
    for (int m = 5; m <= 30; ++m) {
        Labeling lab = flower_snark(m);
        if (weight(lab) != 2 * m + 1 || !validate(build_flower_snark(m), lab).valid)
            ++bad;
    }
    auto t = Clock::now();
    const int j5 = solve_bnb(SolveSpec(build_flower_snark(5))).min_weight;
    const double s = since(t);
    return {bad == 0 && (j5 == 10 || j5 == 11) && s < 900,
            "schemes m=5..30 off=" + std::to_string(bad) + ", exact J5=" + std::to_string(j5) + " (" + secs(s) + ")"};
}

bool same(const SolveResult& a, const SolveResult& b)
{
    if (a.status != b.status)
        return false;
    return !a.optimal() || (a.min_weight == b.min_weight && a.witness == b.witness);
}

Outcome oracle_equivalence(Context&)
{
    struct Instance {
        std::string name;
        SolveSpec spec;
        std::optional<StripTopology> strip;
    };
    std::vector<Instance> instances;
    for (const NamedGraph& ng : cubic_corpus(12)) {
        std::optional<StripTopology> strip;
        if (is_ladder(ng.graph, StripTopology::Cyclic))
            strip = StripTopology::Cyclic;
        instances.push_back({ng.name, SolveSpec(ng.graph), strip});
    }
    for (int m = 1; m <= 6; ++m)
        instances.push_back({"G2," + std::to_string(m), SolveSpec(build_grid(2, m)), StripTopology::Open});
    instances.push_back({"G3,3", SolveSpec(build_grid(3, 3)), std::nullopt});
    instances.push_back({"G3,4", SolveSpec(build_grid(3, 4)), std::nullopt});
    {
        SolveSpec s(build_grid(2, 6));
        for (int v : {0, 5, 6, 11})
            s.exempt_vertex(v);
        s.fix(0, Label::MinusOne).fix(11, Label::Three);
        instances.push_back({"G2,6 exempt corners", s, StripTopology::Open});
    }
    {
        SolveSpec s(build_grid(2, 5));
        s.k = 2;
        instances.push_back({"G2,5 k=2", s, StripTopology::Open});
    }
    {
        SolveSpec s(build_petersen(5, 1));
        s.k = 2;
        s.fix(5, Label::One);
        instances.push_back({"P(5,1) k=2 pinned", s, StripTopology::Cyclic});
    }
    {
        SolveSpec s(build_grid(2, 4));
        for (int v : {0, 1, 4, 5})
            s.fix(v, Label::MinusOne);
        instances.push_back({"G2,4 infeasible", s, StripTopology::Open});
    }
    {
        SolveSpec s(build_petersen(6, 1));
        std::vector<int> half = {0, 1, 2, 6, 7, 8};
        s.objective_only(half);
        instances.push_back({"P(6,1) half objective", s, StripTopology::Cyclic});
    }

    int compared = 0;
    std::vector<std::string> failures;
    for (const Instance& in : instances) {
        SolveResult brute = brute_force(in.spec);
        SolveResult bnb = solve_bnb(in.spec);
        bool ok = same(brute, bnb);
        if (in.strip)
            ok = ok && same(brute, solve_strip_dp(in.spec, *in.strip));
        ++compared;
        if (!ok)
            failures.push_back(in.name);
    }
    // Reduced block graph with pinned boundaries: DP against enumeration.
    std::mt19937 rng(11);
    const auto cs = enumerate_constellations();
    const Graph reduced = build_block_graph(BlockVariant::Reduced);
    for (int i = 0; i < 20; ++i) {
        const Constellation& c = cs[rng() % cs.size()];
        SolveSpec s(reduced);
        for (std::size_t j = 0; j < 8; ++j) {
            const int v = *reduced.id(slot_names()[j]);
            s.fix(v, c[j]);
            if (j == LT || j == LB || j == RT || j == RB)
                s.exempt_vertex(v);
        }
        s.objective_only(std::vector<int>{2, 3, 4, 5, 10, 11, 12, 13});
        SolveResult brute = brute_force(s);
        auto block = solve_block(c, BlockVariant::Reduced);
        const bool ok = same(brute, solve_strip_dp(s, StripTopology::Open)) &&
                        (brute.optimal() ? block == brute.min_weight : !block);
        ++compared;
        if (!ok)
            failures.push_back("reduced block " + format(c));
    }
    std::string detail = std::to_string(compared) + " instances, optima and lex-min witnesses identical";
    if (!failures.empty()) {
        detail = "mismatch:";
        for (const auto& f : failures)
            detail += " " + f;
    }
    return {failures.empty(), detail};
}

struct CriterionDef {
    int id;
    const char* title;
    Outcome (*run)(Context&);
};

const std::vector<CriterionDef>& criteria()
{
    static const std::vector<CriterionDef> defs = {
        {1, "grid value sequence m=1..13", grid_sequence},
        {2, "grid closed form and optimality", grid_closed_form},
        {3, "prism P(m,1) closed form", prism_closed_form},
        {4, "P(m,3) exact values and schemes", petersen_three},
        {5, "discharging certificate", discharging},
        {6, "cubic lower bound with parity", parity},
        {7, "atlas counts and reduction rule", atlas_counts},
        {8, "right-pinned boundary query", right_pinned},
        {9, "boundary matrix center bounds", boundary_matrices},
        {10, "shifted-block families transfer", shifted_families},
        {11, "alpha-total domination pipeline", alpha_pipeline},
        {12, "threshold sandwich k=1..5", threshold_sandwich},
        {13, "flower snark schemes and J5", snark},
        {14, "oracle equivalence", oracle_equivalence},
    };
    return defs;
}

} // namespace

ReproduceReport run_reproduction(const ReproduceOptions& options,
                                 const std::function<void(const CriterionResult&)>& on_result)
{
    Context ctx{options, std::nullopt};
    ReproduceReport report;
    auto selected = [&options](int id) {
        return options.only.empty() || std::find(options.only.begin(), options.only.end(), id) != options.only.end();
    };
    for (const CriterionDef& def : criteria()) {
        if (!selected(def.id))
            continue;
        CriterionResult r;
        r.id = def.id;
        r.title = def.title;
        auto t = Clock::now();
        try {
            Outcome o = def.run(ctx);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = since(t);
        if (on_result)
            on_result(r);
        report.criteria.push_back(r);
    }
    if (ctx.atlas) {
        auto rows = subcase_records(*ctx.atlas);
        std::string detail = std::to_string(rows.size()) + " canonical records (expected 5):";
        for (const BlockRecord& r : rows)
            detail += " " + format(r.d);
        report.findings.push_back({"non-transferring W=16 subcase constellations", detail});
    }
    return report;
}

std::string format_result(const CriterionResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << std::setfill('0') << r.id << "] " << r.title
       << " | " << r.detail << " | " << std::fixed << std::setprecision(2) << r.seconds << " s";
    return os.str();
}

void print_summary(std::ostream& os, const ReproduceReport& report)
{
    int passed = 0;
    for (const CriterionResult& r : report.criteria)
        passed += r.pass;
    for (const Finding& f : report.findings)
        os << "FINDING  " << f.title << " | " << f.detail << "\n";
    os << passed << "/" << report.criteria.size() << " criteria passed\n";
}

} // namespace sdrd
