#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdrd/atlas.hpp"
#include "sdrd/bounds.hpp"
#include "sdrd/constructions.hpp"
#include "sdrd/reproduce.hpp"
#include "sdrd/solver.hpp"

namespace py = pybind11;
using namespace sdrd;

namespace {

Labeling labeling_of(const Graph& g, const std::vector<int>& values)
{
    if (static_cast<int>(values.size()) != g.order())
        throw std::invalid_argument("labeling length does not match the graph order");
    return Labeling::from_values(values);
}

VertexMask exempt_mask(const Graph& g, const std::vector<int>& exempt)
{
    VertexMask mask(static_cast<std::size_t>(g.order()), false);
    for (int v : exempt) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("exempt vertex out of range");
        mask[static_cast<std::size_t>(v)] = true;
    }
    return mask;
}

std::optional<StripTopology> strip_of(const Graph& g)
{
    if (is_ladder(g, StripTopology::Open))
        return StripTopology::Open;
    if (is_ladder(g, StripTopology::Cyclic))
        return StripTopology::Cyclic;
    return std::nullopt;
}

py::dict solve(const Graph& g, int k, const std::string& method, const std::vector<int>& exempt,
               const std::map<int, int>& fixed)
{
    SolveSpec spec(g);
    spec.k = k;
    for (int v : exempt)
        spec.exempt_vertex(v);
    for (auto [v, value] : fixed)
        spec.fix(v, to_label(value));

    std::string used = method;
    auto strip = strip_of(g);
    if (method == "auto")
        used = strip ? "dp" : "bnb";
    SolveResult r;
    {
        py::gil_scoped_release release;
        if (used == "dp") {
            if (!strip)
                throw std::invalid_argument("method dp needs a 2 x m grid or P(m,1) in the standard id layout");
            r = solve_strip_dp(spec, *strip);
        } else if (used == "bnb") {
            r = solve_bnb(spec);
        } else if (used == "brute") {
            r = brute_force(spec);
        } else {
            throw std::invalid_argument("unknown method: " + method);
        }
    }
    py::dict out;
    out["feasible"] = r.optimal();
    out["method"] = used;
    out["weight"] = r.optimal() ? py::object(py::int_(r.min_weight)) : py::object(py::none());
    out["witness"] = r.optimal() ? py::object(py::cast(r.witness.values())) : py::object(py::none());
    return out;
}

py::dict validation(const Graph& g, const std::vector<int>& values, int k, const std::vector<int>& exempt)
{
    ValidationReport rep = validate(g, labeling_of(g, values), k, exempt_mask(g, exempt));
    py::list violations;
    for (const Violation& v : rep.violations)
        violations.append(py::make_tuple(v.vertex, std::string(condition_name(v.condition))));
    py::dict out;
    out["valid"] = rep.valid;
    out["weight"] = rep.weight;
    out["violations"] = violations;
    return out;
}

Constellation constellation_of(const std::vector<int>& values)
{
    if (values.size() != 8)
        throw std::invalid_argument("a constellation has eight labels");
    std::array<int, 8> a{};
    std::copy(values.begin(), values.end(), a.begin());
    return constellation_from_values(a);
}

std::vector<int> values_of(const Constellation& c)
{
    std::vector<int> out;
    for (Label l : c)
        out.push_back(value(l));
    return out;
}

py::tuple record_tuple(const BlockRecord& r)
{
    return py::make_tuple(values_of(r.d), r.minweight_C, r.minweight_Cprime, r.delta());
}

} // namespace

PYBIND11_MODULE(_sdrd, m)
{
    m.doc() = "Signed double Roman domination toolkit";

    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("family", [](const Graph& g) { return describe(g.family()); })
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("name", &Graph::name)
        .def("id", &Graph::id)
        .def("edges", &Graph::edges)
        .def("is_cubic", &Graph::is_cubic)
        .def("connected", &Graph::connected)
        .def("to_edge_list", &serialize_edge_list)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + describe(g.family()) + " n=" + std::to_string(g.order()) + ">";
        });

    m.def("petersen", &build_petersen, py::arg("m"), py::arg("k"));
    m.def("grid", &build_grid, py::arg("rows"), py::arg("cols"));
    m.def("flower_snark", &build_flower_snark, py::arg("m"));
    m.def("complete", &build_complete, py::arg("n"));
    m.def("block_graph", [](bool reduced) {
        return build_block_graph(reduced ? BlockVariant::Reduced : BlockVariant::Full);
    }, py::arg("reduced") = false);
    m.def("random_cubic", &build_random_cubic, py::arg("n"), py::arg("seed"), py::arg("connected") = true);
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });

    m.def("validate", &validation, py::arg("graph"), py::arg("labels"), py::arg("k") = 1,
          py::arg("exempt") = std::vector<int>{});
    m.def("solve", &solve, py::arg("graph"), py::arg("k") = 1, py::arg("method") = "auto",
          py::arg("exempt") = std::vector<int>{}, py::arg("fixed") = std::map<int, int>{});
    m.def("size_limit", &bnb_size_limit);

    m.def("construct", [](const std::string& family, int mm, int k) {
        Scheme s = make_scheme(family, mm, k);
        return py::make_tuple(s.graph, s.labeling.values(), s.predicted_weight);
    }, py::arg("family"), py::arg("m"), py::arg("k") = 1);
    m.def("scheme_families", &scheme_families);

    m.def("lower_bound_cubic", &lower_bound_cubic);
    m.def("bound_report", [](const Graph& g, int k) {
        return py::module_::import("json").attr("loads")(bound_report(g, k).to_json());
    }, py::arg("graph"), py::arg("k") = 1);
    m.def("discharge", [](const Graph& g, const std::vector<int>& values) {
        return discharge(g, labeling_of(g, values)).quarter_charges;
    }, py::arg("graph"), py::arg("labels"));
    m.def("verify_discharge_certificate", [](const Graph& g, const std::vector<int>& values) {
        return verify_discharge_certificate(g, labeling_of(g, values));
    });
    m.def("alpha_total_dom_min", [](const Graph& g) { return alpha_total_dom_min(g); });
    m.def("is_alpha_total_dominating", [](const Graph& g, const std::vector<int>& s) {
        return is_alpha_total_dominating(g, s);
    });
    m.def("labeling_from_set", [](const Graph& g, const std::vector<int>& s) {
        return sd2rdf_from_set(g, s).values();
    });

    m.def("canonical_constellation", [](const std::vector<int>& v) {
        return values_of(canonical_constellation(constellation_of(v)));
    });
    m.def("solve_block", [](const std::vector<int>& v, bool reduced) {
        return solve_block(constellation_of(v), reduced ? BlockVariant::Reduced : BlockVariant::Full);
    }, py::arg("constellation"), py::arg("reduced") = false);
    m.def("count_orbits", &count_orbits);

    py::class_<Atlas>(m, "Atlas")
        .def("__len__", &Atlas::size)
        .def("records", [](const Atlas& a) {
            py::list out;
            for (const BlockRecord& r : a.records())
                out.append(record_tuple(r));
            return out;
        })
        .def("find", [](const Atlas& a, const std::vector<int>& v) -> py::object {
            const BlockRecord* r = a.find(constellation_of(v));
            return r ? py::object(record_tuple(*r)) : py::object(py::none());
        })
        .def("right_pinned", [](const Atlas& a) {
            py::list out;
            for (const BlockRecord& r : query_atlas(a, orbit_matches(right_pinned_pattern())))
                out.append(record_tuple(r));
            return out;
        })
        .def("query", [](const Atlas& a, const std::string& pattern) {
            py::list out;
            for (const BlockRecord& r : query_atlas(a, orbit_matches(parse_pattern(pattern))))
                out.append(record_tuple(r));
            return out;
        })
        .def("to_csv", &atlas_to_csv)
        .def("save", &export_atlas);
    m.def("build_atlas", [](int jobs) {
        py::gil_scoped_release release;
        return build_atlas(jobs);
    }, py::arg("jobs") = 0);
    m.def("load_atlas", &import_atlas);
    m.def("atlas_from_csv", &atlas_from_csv);

    m.def("reproduce", [](int jobs, std::optional<std::string> atlas_path, std::vector<int> only) {
        ReproduceOptions opt;
        opt.jobs = jobs;
        opt.atlas_path = std::move(atlas_path);
        opt.only = std::move(only);
        ReproduceReport rep;
        {
            py::gil_scoped_release release;
            rep = run_reproduction(opt);
        }
        py::list out;
        for (const CriterionResult& c : rep.criteria) {
            py::dict d;
            d["id"] = c.id;
            d["title"] = c.title;
            d["pass"] = c.pass;
            d["detail"] = c.detail;
            d["seconds"] = c.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("jobs") = 4, py::arg("atlas_path") = std::nullopt, py::arg("only") = std::vector<int>{});
}
