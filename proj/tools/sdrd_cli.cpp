// sdrd: command-line front end for the signed double Roman domination toolkit.
//
// Exit codes: 0 success / valid, 1 invalid labeling or failed check,
// 2 usage or input error, 3 size-limit refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdrd/atlas.hpp"
#include "sdrd/bounds.hpp"
#include "sdrd/constructions.hpp"
#include "sdrd/reproduce.hpp"
#include "sdrd/solver.hpp"

using namespace sdrd;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

struct GraphOptions {
    std::string family;
    int m = 0;
    int shift = 1;
    int rows = 2;
    int cols = 0;
    std::string edges;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--family", family,
                        "petersen | grid | snark | complete | block | block-reduced (or use --edges)");
        cmd->add_option("--m", m, "family size parameter (petersen, snark, complete)");
        cmd->add_option("--k", shift, "Petersen inner shift")->capture_default_str();
        cmd->add_option("--rows", rows, "grid rows")->capture_default_str();
        cmd->add_option("--cols", cols, "grid columns");
        cmd->add_option("--edges", edges, "edge-list file ('n m' header, then 'a b' lines)");
    }

    Graph build() const
    {
        if (!edges.empty()) {
            if (!family.empty())
                throw std::invalid_argument("give either --family or --edges, not both");
            return parse_edge_list(read_file(edges));
        }
        if (family == "petersen")
            return build_petersen(m, shift);
        if (family == "grid")
            return build_grid(rows, cols);
        if (family == "snark")
            return build_flower_snark(m);
        if (family == "complete")
            return build_complete(m);
        if (family == "block")
            return build_block_graph(BlockVariant::Full);
        if (family == "block-reduced")
            return build_block_graph(BlockVariant::Reduced);
        if (family.empty())
            throw std::invalid_argument("a graph is required: --family ... or --edges FILE");
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    static std::string read_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::invalid_argument("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

VertexMask exempt_mask(const Graph& g, const std::vector<int>& exempt)
{
    return exempt.empty() ? VertexMask{} : mask_of(g.order(), exempt);
}

void write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw std::runtime_error("cannot write '" + path + "'");
}

int cmd_gamma(const GraphOptions& go, int threshold, const std::string& method, const std::vector<int>& exempt,
              const std::string& witness_path)
{
    SolveSpec spec(go.build());
    spec.k = threshold;
    if (!exempt.empty())
        spec.exempt = exempt_mask(spec.graph, exempt);

    std::string used = method;
    std::optional<StripTopology> strip;
    if (is_ladder(spec.graph, StripTopology::Open))
        strip = StripTopology::Open;
    else if (is_ladder(spec.graph, StripTopology::Cyclic))
        strip = StripTopology::Cyclic;
    if (method == "auto")
        used = strip ? "dp" : "bnb";
    if (used == "dp" && !strip)
        throw std::invalid_argument("method dp needs a 2 x m grid or P(m,1) in the standard id layout");

    auto t = std::chrono::steady_clock::now();
    SolveResult r;
    if (used == "dp")
        r = solve_strip_dp(spec, *strip);
    else if (used == "bnb")
        r = solve_bnb(spec);
    else if (used == "brute")
        r = brute_force(spec);
    else
        throw std::invalid_argument("unknown method '" + method + "'");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();

    json j;
    j["graph"] = describe(spec.graph.family());
    j["n"] = spec.graph.order();
    j["k"] = threshold;
    j["method"] = used;
    j["status"] = r.optimal() ? "optimal" : "infeasible";
    j["min_weight"] = r.optimal() ? json(r.min_weight) : json(nullptr);
    if (r.optimal() && !witness_path.empty()) {
        write_text(witness_path, to_csv(r.witness));
        j["witness"] = witness_path;
    }
    j["elapsed_seconds"] = seconds;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const GraphOptions& go, const std::string& labeling_path, int threshold,
               const std::vector<int>& exempt)
{
    Graph g = go.build();
    Labeling lab = labeling_from_csv(GraphOptions::read_file(labeling_path));
    ValidationReport rep = validate(g, lab, threshold, exempt_mask(g, exempt));
    json j;
    j["valid"] = rep.valid;
    j["weight"] = rep.weight;
    j["k"] = threshold;
    json violations = json::array();
    for (const Violation& v : rep.violations)
        violations.push_back({{"vertex", v.vertex}, {"name", g.name(v.vertex)},
                              {"condition", std::string(condition_name(v.condition))}});
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
    return rep.valid ? 0 : kExitInvalid;
}

int cmd_construct(const std::string& family, int m, int shift, const std::string& out)
{
    Scheme s = make_scheme(family, m, shift);
    const int w = weight(s.labeling);
    json j;
    j["family"] = family;
    j["m"] = m;
    j["graph"] = describe(s.graph.family());
    j["weight"] = w;
    j["predicted_weight"] = s.predicted_weight;
    j["valid"] = validate(s.graph, s.labeling).valid;
    j["labeling"] = out;
    write_text(out, to_csv(s.labeling));
    (out == "-" ? std::cerr : std::cout) << j.dump(2) << "\n";
    return w == s.predicted_weight ? 0 : kExitInvalid;
}

int cmd_bounds(const GraphOptions& go, int threshold)
{
    std::cout << bound_report(go.build(), threshold).to_json() << "\n";
    return 0;
}

int cmd_discharge(const GraphOptions& go, const std::string& labeling_path)
{
    Graph g = go.build();
    Labeling lab = labeling_from_csv(GraphOptions::read_file(labeling_path));
    ChargeVector c = discharge(g, lab);
    json j;
    j["quarter_charges"] = c.quarter_charges;
    j["min_quarter_charge"] = c.min();
    j["min_charge"] = c.min() / 4.0;
    j["total_quarter_charge"] = c.total();
    j["total_charge"] = c.total() / 4.0;
    j["weight"] = weight(lab);
    j["conserved"] = c.total() == 4 * weight(lab);
    j["certificate"] = c.min() >= 2 && c.total() == 4 * weight(lab);
    std::cout << j.dump(2) << "\n";
    return j["certificate"].get<bool>() ? 0 : kExitInvalid;
}

std::string record_row(const BlockRecord& r)
{
    Atlas one({r});
    std::string csv = atlas_to_csv(one);
    return csv.substr(csv.find('\n') + 1);
}

int atlas_check(const Atlas& atlas)
{
    int failed = 0;
    auto line = [&failed](const std::string& claim, bool pass, const std::string& detail = "") {
        failed += !pass;
        std::cout << claim << ": " << (pass ? "PASS" : "FAIL") << (detail.empty() ? "" : "  (" + detail + ")")
                  << "\n";
    };
    line("record count = 14940", atlas.size() == 14940, std::to_string(atlas.size()));

    int min_c = -1;
    bool reduction_ok = true;
    for (const BlockRecord& r : atlas.records()) {
        if (!r.minweight_C)
            continue;
        if (min_c < 0 || *r.minweight_C < min_c)
            min_c = *r.minweight_C;
        if ((*r.minweight_C == 6 || *r.minweight_C == 7 || *r.minweight_C == 9) && r.delta() != 4)
            reduction_ok = false;
    }
    line("min minweight_C = 6", min_c == 6, std::to_string(min_c));
    line("no feasible minweight_C <= 5", min_c > 5);
    line("minweight_C in {6,7,9} implies delta = 4", reduction_ok);

    auto pinned = query_atlas(atlas, orbit_matches(right_pinned_pattern()));
    bool pinned_delta = std::all_of(pinned.begin(), pinned.end(), [](const BlockRecord& r) { return r.delta() == 4; });
    line("right-pinned boundary: 129 records, all delta = 4", pinned.size() == 129 && pinned_delta,
         std::to_string(pinned.size()));

    int row = 0;
    for (const BoundaryClaim& claim : boundary_claims()) {
        BlockRecord r = lookup_or_solve(from_matrix(claim.matrix), atlas);
        ++row;
        line("boundary matrix " + std::to_string(row) + ": minweight_C >= " + std::to_string(claim.center_lower_bound),
             !r.minweight_C || *r.minweight_C >= claim.center_lower_bound,
             r.minweight_C ? std::to_string(*r.minweight_C) : "inf");
    }
    FamilyCheck a = check_family_one_three(atlas);
    FamilyCheck b = check_family_inner_sum(atlas);
    line("shifted block, inner {1,3}: all realizable completions transfer", a.holds(),
         std::to_string(a.quality) + "/" + std::to_string(a.realizable));
    line("shifted block, inner sum >= 3: all realizable completions transfer", b.holds(),
         std::to_string(b.quality) + "/" + std::to_string(b.realizable));
    std::cout << "finding: non-transferring W=16 subcase records = " << subcase_records(atlas).size() << "\n";
    return failed ? kExitInvalid : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signed double Roman domination toolkit"};
    app.require_subcommand(1);

    GraphOptions gamma_graph;
    int gamma_threshold = 1;
    std::string gamma_method = "auto";
    std::vector<int> gamma_exempt;
    std::string gamma_witness;
    auto* gamma = app.add_subcommand("gamma", "exact minimum weight of an SDkRDF");
    gamma_graph.attach(gamma);
    gamma->add_option("--threshold", gamma_threshold, "closed-neighborhood threshold k")->capture_default_str();
    gamma->add_option("--method", gamma_method, "auto | bnb | dp | brute")->capture_default_str();
    gamma->add_option("--exempt", gamma_exempt, "vertices whose own conditions are waived");
    gamma->add_option("--witness", gamma_witness, "write the optimal labeling CSV here ('-' for stdout)");

    GraphOptions verify_graph;
    std::string verify_labeling;
    int verify_threshold = 1;
    std::vector<int> verify_exempt;
    auto* verify = app.add_subcommand("verify", "check a labeling CSV against the domination conditions");
    verify_graph.attach(verify);
    verify->add_option("--labeling", verify_labeling, "labeling CSV")->required();
    verify->add_option("--threshold", verify_threshold, "closed-neighborhood threshold k")->capture_default_str();
    verify->add_option("--exempt", verify_exempt, "vertices whose own conditions are waived");

    std::string construct_family;
    int construct_m = 0;
    int construct_shift = 1;
    std::string construct_out = "-";
    auto* construct = app.add_subcommand("construct", "emit a family labeling scheme");
    construct->add_option("--family", construct_family, "petersen-m1 | petersen-m3 | petersen-even | snark | grid2xm")
        ->required();
    construct->add_option("--m", construct_m, "size parameter")->required();
    construct->add_option("--k", construct_shift, "inner shift for petersen-even")->capture_default_str();
    construct->add_option("--out", construct_out, "CSV destination ('-' for stdout)")->capture_default_str();

    GraphOptions bounds_graph;
    int bounds_threshold = 1;
    auto* bounds = app.add_subcommand("bounds", "closed-form bounds for a cubic graph (JSON)");
    bounds_graph.attach(bounds);
    bounds->add_option("--threshold", bounds_threshold, "closed-neighborhood threshold k")->capture_default_str();

    GraphOptions discharge_graph;
    std::string discharge_labeling;
    auto* discharge_cmd = app.add_subcommand("discharge", "run the charge redistribution on a valid labeling");
    discharge_graph.attach(discharge_cmd);
    discharge_cmd->add_option("--labeling", discharge_labeling, "labeling CSV")->required();

    std::string atlas_db;
    int atlas_jobs = 0;
    std::string atlas_pattern;
    bool atlas_right_pinned = false;
    std::optional<int> atlas_delta_min;
    std::optional<int> atlas_minweight;
    auto* atlas = app.add_subcommand("atlas", "boundary-constellation database");
    atlas->require_subcommand(1);
    auto* atlas_build = atlas->add_subcommand("build", "solve every canonical constellation and write the CSV");
    atlas_build->add_option("--db", atlas_db, "output CSV")->required();
    atlas_build->add_option("--jobs", atlas_jobs, "worker threads (0 = all cores)")->capture_default_str();
    auto* atlas_check_cmd = atlas->add_subcommand("check", "run the claim suite against a database");
    atlas_check_cmd->add_option("--db", atlas_db, "atlas CSV")->required();
    auto* atlas_query = atlas->add_subcommand("query", "print matching rows");
    atlas_query->add_option("--db", atlas_db, "atlas CSV")->required();
    atlas_query->add_option("--pattern", atlas_pattern,
                            "8 comma-separated labels or '*', slot order l_t,l_ti,l_b,l_bi,r_ti,r_t,r_bi,r_b; "
                            "matched against every symmetric image");
    atlas_query->add_flag("--right-pinned", atlas_right_pinned, "shorthand for --pattern '*,*,*,*,3,-1,3,-1'");
    atlas_query->add_option("--delta-min", atlas_delta_min, "keep rows with delta >= T");
    atlas_query->add_option("--minweight", atlas_minweight, "keep rows with minweight_C = W");

    int reproduce_jobs = 4;
    std::string reproduce_atlas;
    auto* reproduce = app.add_subcommand("reproduce", "run the full acceptance suite");
    reproduce->add_option("--jobs", reproduce_jobs, "atlas worker threads")->capture_default_str();
    reproduce->add_option("--atlas", reproduce_atlas, "reuse an atlas CSV instead of building");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gamma)
            return cmd_gamma(gamma_graph, gamma_threshold, gamma_method, gamma_exempt, gamma_witness);
        if (*verify)
            return cmd_verify(verify_graph, verify_labeling, verify_threshold, verify_exempt);
        if (*construct)
            return cmd_construct(construct_family, construct_m, construct_shift, construct_out);
        if (*bounds)
            return cmd_bounds(bounds_graph, bounds_threshold);
        if (*discharge_cmd)
            return cmd_discharge(discharge_graph, discharge_labeling);
        if (*atlas_build) {
            auto t = std::chrono::steady_clock::now();
            Atlas a = build_atlas(atlas_jobs);
            export_atlas(a, atlas_db);
            std::cout << "wrote " << a.size() << " rows to " << atlas_db << " in "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count() << " s\n";
            return 0;
        }
        if (*atlas_check_cmd)
            return atlas_check(import_atlas(atlas_db));
        if (*atlas_query) {
            Atlas a = import_atlas(atlas_db);
            std::vector<RecordPredicate> preds;
            if (atlas_right_pinned)
                preds.push_back(orbit_matches(right_pinned_pattern()));
            if (!atlas_pattern.empty())
                preds.push_back(orbit_matches(parse_pattern(atlas_pattern)));
            if (atlas_delta_min)
                preds.push_back(delta_at_least(*atlas_delta_min));
            if (atlas_minweight)
                preds.push_back(minweight_equals(*atlas_minweight));
            auto rows = query_atlas(a, [&preds](const BlockRecord& r) {
                return std::all_of(preds.begin(), preds.end(), [&r](const RecordPredicate& p) { return p(r); });
            });
            std::cout << "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n";
            for (const BlockRecord& r : rows)
                std::cout << record_row(r);
            std::cerr << rows.size() << " rows\n";
            return 0;
        }
        if (*reproduce) {
            ReproduceOptions opts;
            opts.jobs = reproduce_jobs;
            if (!reproduce_atlas.empty())
                opts.atlas_path = reproduce_atlas;
            auto report =
                run_reproduction(opts, [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
            print_summary(std::cout, report);
            return report.all_pass() ? 0 : kExitInvalid;
        }
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
