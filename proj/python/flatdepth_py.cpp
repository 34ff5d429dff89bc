#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "flatdepth/cli/commands.hpp"
#include "flatdepth/cli/io.hpp"
#include "flatdepth/depth.hpp"
#include "flatdepth/dual.hpp"
#include "flatdepth/oracle.hpp"

namespace py = pybind11;
using namespace flatdepth;

namespace {

// int, str ("n/d"), Fraction, or float (taken exactly).
Rat to_rat(const py::handle& value) {
    py::object exact = py::reinterpret_borrow<py::object>(value);
    if (py::isinstance<py::bool_>(value)) {
        throw py::type_error("coordinates must be int, str, Fraction or float, not bool");
    }
    if (py::isinstance<py::float_>(value)) {
        exact = py::module_::import("fractions").attr("Fraction")(value);
    }
    return Rat::parse(py::str(exact).cast<std::string>());
}

RatVector to_vector(const py::handle& seq) {
    RatVector out;
    for (const auto& item : py::reinterpret_borrow<py::sequence>(seq)) {
        out.push_back(to_rat(item));
    }
    return out;
}

std::vector<RatVector> to_points(const py::sequence& seq) {
    std::vector<RatVector> out;
    for (const auto& item : seq) {
        out.push_back(to_vector(item));
    }
    return out;
}

AffineFlatSpec to_flat(const py::sequence& seq) {
    auto pts = to_points(seq);
    if (pts.size() == 1) {
        return AffineFlatSpec::point(std::move(pts[0]));
    }
    if (pts.size() == 2) {
        return AffineFlatSpec::through(std::move(pts[0]), std::move(pts[1]));
    }
    throw py::value_error("a flat is given by one point or two distinct points");
}

std::vector<AffineHyperplane> to_hyperplanes(const py::sequence& seq) {
    std::vector<AffineHyperplane> out;
    for (const auto& item : seq) {
        auto pair = py::reinterpret_borrow<py::sequence>(item);
        if (pair.size() != 2) {
            throw py::value_error("a hyperplane is a pair (a, b) meaning a . x = b");
        }
        out.push_back({to_vector(pair[0]), to_rat(pair[1])});
    }
    return out;
}

py::object fraction(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::list fractions(const RatVector& v) {
    py::list out;
    for (const auto& r : v) {
        out.append(fraction(r));
    }
    return out;
}

py::dict result_dict(const DepthResult& r) {
    py::dict w;
    w["u1"] = fractions(r.witness.u1.coords());
    w["u2"] = fractions(r.witness.u2.coords());
    w["degenerate"] = r.witness.degenerate;
    py::dict out;
    out["distance"] = r.distance;
    out["strict_min"] = r.strict_min;
    out["incident_count"] = r.incident_count;
    out["n_active"] = r.n_active;
    out["solver"] = r.solver;
    out["witness"] = w;
    return out;
}

py::dict hyperplane_dict(const PrimalHyperplane& h) {
    py::dict out;
    out["coeffs"] = fractions(h.coeffs);
    out["rhs"] = fraction(h.rhs);
    out["at_infinity"] = h.at_infinity;
    return out;
}

py::dict report_dict(const DepthReport& r) {
    py::dict out = result_dict(r.result);
    py::dict primal;
    primal["first"] = hyperplane_dict(r.primal.first);
    primal["second"] = hyperplane_dict(r.primal.second);
    primal["count"] = r.primal.count;
    out["primal"] = primal;
    return out;
}

std::vector<ArrangementFunctional> functionals_of(const std::vector<AffineHyperplane>& hs) {
    std::vector<ArrangementFunctional> out;
    for (const auto& h : hs) {
        out.push_back(functional_of_affine_hyperplane(h.a, h.b));
    }
    return out;
}

std::size_t ambient_dimension(const std::vector<AffineHyperplane>& hs, const std::vector<RatVector>& pts) {
    if (!hs.empty()) {
        return hs.front().a.size();
    }
    return pts.front().size();
}

} // namespace

PYBIND11_MODULE(_flatdepth, m) {
    m.doc() = "Exact crossing distance, regression depth and Tukey depth.";

    py::register_exception<UnsupportedFlat>(m, "UnsupportedFlat", PyExc_ValueError);
    py::register_exception<cli::InputError>(m, "InputError", PyExc_ValueError);

    m.def("tukey_depth2", [](const py::sequence& points, const py::sequence& q) {
        return report_dict(tukey_depth2(to_points(points), to_vector(q)));
    }, py::arg("points"), py::arg("q"));

    m.def("regression_depth_line2", [](const py::sequence& points, const py::sequence& line) {
        return report_dict(regression_depth_line2(to_points(points), to_flat(line)));
    }, py::arg("points"), py::arg("line"));

    m.def("regression_depth_line3", [](const py::sequence& points, const py::sequence& line) {
        return report_dict(regression_depth_line3(to_points(points), to_flat(line)));
    }, py::arg("points"), py::arg("line"));

    m.def("crossing_distance", [](const py::sequence& hyperplanes, const py::sequence& a, const py::sequence& b) {
        return result_dict(crossing_distance(to_hyperplanes(hyperplanes), to_flat(a), to_flat(b)));
    }, py::arg("hyperplanes"), py::arg("a"), py::arg("b"));

    m.def("crossing_distance_bruteforce", [](const py::sequence& hyperplanes, const py::sequence& a,
                                             const py::sequence& b) {
        const auto hs = to_hyperplanes(hyperplanes);
        const auto fa = to_flat(a);
        const auto fb = to_flat(b);
        const std::size_t d = ambient_dimension(hs, fa.points);
        auto built = build_instance(functionals_of(hs), fa.lift(d), fb.lift(d));
        if (auto* meet = std::get_if<IntersectingFlats>(&built)) {
            return result_dict(intersecting_result(*meet));
        }
        return result_dict(oracle::brute_force_min(std::get<CoveringInstance>(built)));
    }, py::arg("hyperplanes"), py::arg("a"), py::arg("b"));

    m.def("run_instance", [](const std::string& text, bool oracle) {
        cli::RunOptions opts;
        opts.use_oracle = oracle;
        return cli::result_to_json(cli::run_query(cli::parse_instance_text(text), opts)).dump(2);
    }, py::arg("instance_json"), py::arg("oracle") = false,
       "Runs an InstanceFile document and returns the ResultFile document.");

    m.def("verify_result", [](const std::string& instance_text, const std::string& result_text) {
        const auto inst = cli::parse_instance_text(instance_text);
        const auto result = cli::result_from_json(cli::Json::parse(result_text));
        return cli::verify_witness(inst, result).problems;
    }, py::arg("instance_json"), py::arg("result_json"),
       "Recounts a ResultFile against its instance; returns the list of problems, empty when it checks out.");
}
