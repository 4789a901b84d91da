#include "cli.hpp"
#include "trackcut/errors.hpp"
#include "trackcut/ftfvs.hpp"
#include "trackcut/fvs.hpp"
#include "trackcut/io.hpp"
#include "trackcut/multicut.hpp"
#include "trackcut/oracles.hpp"
#include "trackcut/tracking.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace trackcut;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_fraction_string(q));
}

py::dict selection_dict(const VertexSelection& sel) {
    py::dict d;
    d["solution"] = sel.members();
    d["weight"] = sel.total_weight();
    return d;
}

std::vector<Path> as_paths(const std::vector<std::vector<int>>& seqs) {
    std::vector<Path> out;
    for (const auto& s : seqs) out.push_back(Path{s});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Approximation pipelines for tracking paths, fault tolerant fvs and vertex multicut";

    static py::exception<Error> error(m, "TrackcutError", PyExc_RuntimeError);
    static py::exception<GraphError> graph_error(m, "GraphError", error.ptr());
    static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", error.ptr());
    static py::exception<InfeasibleInstance> infeasible(m, "InfeasibleInstance", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InfeasibleInstance& e) {
            py::set_error(infeasible, e.what());
        } catch (const CapExceeded& e) {
            py::set_error(cap_exceeded, e.what());
        } catch (const GraphError& e) {
            py::set_error(graph_error, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init([](int n, std::vector<std::pair<int, int>> edges, std::vector<Weight> weights) {
                 return WeightedGraph(n, std::move(edges), std::move(weights));
             }),
             py::arg("n"), py::arg("edges"), py::arg("weights") = std::vector<Weight>{})
        .def_property_readonly("n", &WeightedGraph::vertex_count)
        .def_property_readonly("edges", &WeightedGraph::edges)
        .def_property_readonly("weights", &WeightedGraph::weights)
        .def("neighbors", [](const WeightedGraph& g, int v) {
            auto nb = g.neighbors(v);
            return std::vector<int>(nb.begin(), nb.end());
        })
        .def("__eq__", [](const WeightedGraph& a, const WeightedGraph& b) { return a == b; })
        .def("__repr__", [](const WeightedGraph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return os.str();
        });

    m.def("approx_fvs", [](const WeightedGraph& g) { return approx_fvs(g).members(); });
    m.def("girth", &girth);

    m.def(
        "solve_tracking",
        [](const WeightedGraph& g, int s, int t) {
            const auto res = solve_tracking_detailed(TrackingInstance(g, s, t));
            py::dict d = selection_dict(res.solution);
            d["lp_opt"] = res.lp ? to_fraction(res.lp->objective_value) : py::none();
            d["early_exit"] = res.early_exit;
            return d;
        },
        py::arg("graph"), py::arg("s"), py::arg("t"));
    m.def(
        "is_tracking_set",
        [](const WeightedGraph& g, int s, int t, const std::vector<int>& cand) {
            return is_tracking_set(TrackingInstance(g, s, t), cand);
        },
        py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("candidate"));

    m.def(
        "solve_ftfvs",
        [](const WeightedGraph& g, int r) {
            const auto res = solve_ftfvs_detailed(FtfvsInstance(g, r));
            py::dict d = selection_dict(res.solution);
            d["lp_opt"] = to_fraction(res.lp.objective_value);
            return d;
        },
        py::arg("graph"), py::arg("r"));
    m.def(
        "verify_ftfvs",
        [](const WeightedGraph& g, int r, const std::vector<int>& cand) {
            return !ftfvs_violation(FtfvsInstance(g, r), cand).has_value();
        },
        py::arg("graph"), py::arg("r"), py::arg("candidate"));
    m.def(
        "hardness_gadget",
        [](const WeightedGraph& g, int k, int r) {
            auto gadget = gen_hardness_gadget(g, k, r);
            return py::make_tuple(gadget.instance.graph(), gadget.k_prime);
        },
        py::arg("graph"), py::arg("k"), py::arg("r"));

    m.def(
        "solve_mcf_forest",
        [](const WeightedGraph& f, const std::vector<std::vector<int>>& paths) {
            const auto inst = McfInstance::forest(f, as_paths(paths));
            const auto frac = solve(forest_mcf_lp(inst));
            const auto cut = f.has_uniform_weights() ? solve_unweighted_forest(inst)
                                                     : round_weighted_forest(inst, frac);
            py::dict d = selection_dict(cut);
            d["lp_opt"] = to_fraction(frac.objective_value);
            return d;
        },
        py::arg("forest"), py::arg("paths"));
    m.def(
        "solve_mcf_chordal",
        [](const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs) {
            const auto inst = McfInstance::chordal(g, pairs);
            const auto lp = solve_chordal_lp(inst);
            py::dict d = selection_dict(round_chordal(inst, lp.solution));
            d["lp_opt"] = to_fraction(lp.solution.objective_value);
            return d;
        },
        py::arg("graph"), py::arg("pairs"));

    m.def("exact_fvs", [](const WeightedGraph& g) { return exact_fvs(g).members(); });
    m.def(
        "exact_ftfvs",
        [](const WeightedGraph& g, int r) -> std::optional<std::vector<int>> {
            auto sel = exact_ftfvs(FtfvsInstance(g, r));
            if (!sel) return std::nullopt;
            return sel->members();
        },
        py::arg("graph"), py::arg("r"));
    m.def(
        "exact_tracking",
        [](const WeightedGraph& g, int s, int t) {
            return exact_tracking(TrackingInstance(g, s, t)).members();
        },
        py::arg("graph"), py::arg("s"), py::arg("t"));

    m.def(
        "parse_instance",
        [](const std::string& text) {
            const auto f = parse_instance(text);
            py::dict d;
            d["graph"] = f.graph;
            d["st"] = f.st;
            d["r"] = f.r;
            d["pairs"] = f.pairs;
            d["comments"] = f.comments;
            return d;
        },
        py::arg("text"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
