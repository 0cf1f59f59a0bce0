// Python bindings for the core library.  Experiment entry points return the
// canonical JSON report text, byte-identical to the CLI output for the same
// parameters; everything else maps onto small native types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "teichlab/continued_fraction.hpp"
#include "teichlab/experiments.hpp"
#include "teichlab/farey.hpp"
#include "teichlab/gromov.hpp"
#include "teichlab/metric_sample.hpp"
#include "teichlab/slope.hpp"
#include "teichlab/teich.hpp"

namespace py = pybind11;
using namespace teichlab;

namespace {

Slope parse_slope(const std::string& text) {
    auto s = Slope::parse(text);
    if (!s) throw std::invalid_argument("cannot parse slope: " + text);
    return *s;
}

ContinuedFraction parse_cf(const std::string& text) {
    auto cf = ContinuedFraction::parse(text);
    if (!cf) throw std::invalid_argument("cannot parse continued fraction: " + text);
    return *cf;
}

MetricSample sample_of(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::string> labels;
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("distance matrix must be square");
        labels.push_back("p" + std::to_string(i));
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return MetricSample::from_matrix(std::move(labels), std::move(flat));
}

}  // namespace

PYBIND11_MODULE(_teichlab, m) {
    m.doc() = "flat tori, slope graphs, and electrified distances";
    m.attr("__version__") = "0.1.0";

    py::class_<Slope>(m, "Slope", "A slope p/q in lowest terms; q = 0 is the slope at infinity.")
        .def(py::init([](i64 p, i64 q) { return Slope::of(p, q); }), py::arg("p"), py::arg("q"))
        .def_static("parse", &parse_slope, py::arg("text"))
        .def_static("infinity", &Slope::infinity)
        .def_readonly("p", &Slope::p)
        .def_readonly("q", &Slope::q)
        .def("value", &Slope::value)
        .def("is_infinite", &Slope::is_infinite)
        .def("__str__", &Slope::str)
        .def("__repr__", [](const Slope& s) { return "Slope(" + s.str() + ")"; })
        .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; }, py::is_operator())
        .def("__hash__", [](const Slope& s) { return SlopeHash{}(s); });

    py::class_<ContinuedFraction>(m, "ContinuedFraction",
                                  "Continued fraction [a0;a1,...], optionally with a periodic "
                                  "tail in parentheses, e.g. \"[1;(1)]\".")
        .def_static("parse", &parse_cf, py::arg("text"))
        .def_static("finite", &ContinuedFraction::finite, py::arg("a0"),
                    py::arg("terms") = std::vector<i64>{})
        .def_static("periodic", &ContinuedFraction::periodic, py::arg("a0"), py::arg("head"),
                    py::arg("period"))
        .def("value", &ContinuedFraction::value)
        .def("is_rational", &ContinuedFraction::is_rational)
        .def("to_slope", &ContinuedFraction::to_slope)
        .def(
            "convergents",
            [](const ContinuedFraction& cf, std::size_t n) {
                return cf_convergents(cf, n).convergents;
            },
            py::arg("n"))
        .def("__str__", &ContinuedFraction::str)
        .def("__repr__",
             [](const ContinuedFraction& cf) { return "ContinuedFraction(" + cf.str() + ")"; });

    py::class_<TeichPoint>(m, "TeichPoint", "Modulus x + iy of a marked flat torus, y > 0.")
        .def(py::init([](double x, double y) { return TeichPoint::of(x, y); }), py::arg("x"),
             py::arg("y"))
        .def_readonly("x", &TeichPoint::x)
        .def_readonly("y", &TeichPoint::y)
        .def("__eq__", [](const TeichPoint& a, const TeichPoint& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const TeichPoint& t) {
            return "TeichPoint(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ")";
        });

    py::class_<FoliationVec>(m, "FoliationVec",
                             "Measured foliation identified with a direction vector (a, b).")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_static("of_slope", &FoliationVec::of_slope, py::arg("slope"))
        .def_static(
            "scaled",
            [](const Slope& s, i64 num, i64 den) {
                return FoliationVec::scaled(s, Rational::of(num, den));
            },
            py::arg("slope"), py::arg("num"), py::arg("den"))
        .def_static("irrational", &FoliationVec::irrational, py::arg("a"), py::arg("b"))
        .def_property_readonly("a", &FoliationVec::a)
        .def_property_readonly("b", &FoliationVec::b)
        .def("__repr__", [](const FoliationVec& f) {
            return "FoliationVec(" + std::to_string(f.a()) + ", " + std::to_string(f.b()) + ")";
        });

    py::class_<LabConfig>(m, "LabConfig", "Shared knobs for the experiment suite.")
        .def(py::init<>())
        .def_readwrite("epsilon", &LabConfig::epsilon)
        .def_readwrite("spacing", &LabConfig::spacing)
        .def_readwrite("window", &LabConfig::window)
        .def_readwrite("y_min", &LabConfig::y_min)
        .def_readwrite("y_max", &LabConfig::y_max)
        .def_readwrite("cone_denom_bound", &LabConfig::cone_denom_bound)
        .def_readwrite("apex_denom_bound", &LabConfig::apex_denom_bound)
        .def_readwrite("seed", &LabConfig::seed);

    // --- intersections and flat-torus geometry ---------------------------

    m.def(
        "intersection", [](const Slope& a, const Slope& b) { return intersection(a, b); },
        py::arg("a"), py::arg("b"), "Geometric intersection number |p1 q2 - p2 q1|.");
    m.def(
        "intersection",
        [](const FoliationVec& f, const FoliationVec& g) { return intersection(f, g); },
        py::arg("f"), py::arg("g"));
    m.def("teich_distance", &teich_distance, py::arg("s"), py::arg("t"));
    m.def("extremal_length", &extremal_length, py::arg("f"), py::arg("tau"),
          "Extremal length |a + b tau|^2 / Im tau of the foliation (a, b) at tau.");
    m.def(
        "hv_pair",
        [](const TeichPoint& base, double theta, double norm) {
            HVPair hv = hv_pair(base, theta, norm);
            return std::make_pair(hv.horizontal, hv.vertical);
        },
        py::arg("base"), py::arg("theta"), py::arg("norm"),
        "Horizontal/vertical foliation pair with the given argument and norm.");
    m.def("ray_point", &ray_point, py::arg("start"), py::arg("v"), py::arg("t"),
          "Point at distance t along the ray from start with vertical foliation v.");
    m.def("geodesic_segment", &geodesic_segment, py::arg("s"), py::arg("t"), py::arg("n"),
          "n evenly spaced points along the geodesic from s to t.");

    // --- the slope graph --------------------------------------------------

    auto opts_of = [](i64 denom_bound) {
        FareyOptions fo;
        fo.denom_bound = denom_bound;
        return fo;
    };
    m.def(
        "farey_distance",
        [opts_of](const Slope& a, const Slope& b, i64 threshold, i64 denom_bound) {
            return farey_distance(a, b, FareyParams{threshold}, opts_of(denom_bound));
        },
        py::arg("a"), py::arg("b"), py::arg("threshold") = 1, py::arg("denom_bound") = 0,
        "Graph distance between two slopes (edges join slopes meeting `threshold` times).");
    m.def(
        "geodesic_path",
        [opts_of](const Slope& a, const Slope& b, i64 threshold, i64 denom_bound) {
            return geodesic_path(a, b, FareyParams{threshold}, opts_of(denom_bound));
        },
        py::arg("a"), py::arg("b"), py::arg("threshold") = 1, py::arg("denom_bound") = 0,
        "One shortest path from a to b, deterministic under ties.");
    m.def(
        "farey_ball",
        [](const Slope& center, int radius, i64 threshold, i64 denom_bound) {
            FareyBall b = ball(center, radius, FareyParams{threshold}, denom_bound);
            py::dict out;
            out["center"] = b.center;
            out["radius"] = b.radius;
            out["denom_bound"] = b.denom_bound;
            out["vertices"] = b.vertices;
            out["dist"] = b.dist;
            out["edges"] = b.edges;
            return out;
        },
        py::arg("center"), py::arg("radius"), py::arg("threshold") = 1,
        py::arg("denom_bound") = 0,
        "Ball of the bounded slope graph with distances and induced edges.");
    m.def(
        "neighbor_fan",
        [](const Slope& v, i64 denom_bound, i64 threshold) {
            return neighbor_fan(v, denom_bound, FareyParams{threshold});
        },
        py::arg("v"), py::arg("denom_bound"), py::arg("threshold") = 1);

    // --- coarse-geometry diagnostics ---------------------------------------

    m.def(
        "delta_four_point",
        [](const std::vector<std::vector<double>>& matrix, std::size_t exact_cutoff,
           std::size_t sample_points, std::uint64_t seed) {
            DeltaOptions opts;
            opts.exact_cutoff = exact_cutoff;
            opts.sample_points = sample_points;
            opts.seed = seed;
            DeltaReport rep = delta_four_point(sample_of(matrix), opts);
            py::dict out;
            out["delta"] = rep.delta;
            out["witness"] = rep.witness;
            out["points_used"] = rep.points_used;
            out["points_total"] = rep.points_total;
            out["exhaustive"] = rep.exhaustive;
            return out;
        },
        py::arg("matrix"), py::arg("exact_cutoff") = 300, py::arg("sample_points") = 120,
        py::arg("seed") = 1729,
        "Four-point hyperbolicity constant of a finite metric (square distance matrix).");
    m.def(
        "quasi_isometry_fit",
        [](const std::vector<std::pair<double, double>>& pairs, double tol) {
            std::vector<QiPair> qp;
            for (auto [d0, d1] : pairs) qp.push_back(QiPair{d0, d1});
            QiFit fit = quasi_isometry_fit(qp, tol);
            py::dict out;
            out["k"] = fit.k;
            out["mu"] = fit.mu;
            out["finite"] = fit.finite;
            return out;
        },
        py::arg("pairs"), py::arg("tol") = 1e-9,
        "Minimal (k, mu) with d0/k - mu <= d1 <= k d0 + mu over all (d0, d1) pairs.");

    // --- experiments (canonical JSON text, byte-stable per parameters) ----

    m.def(
        "ray_profile",
        [](const std::string& target, double T, double step, const LabConfig& config) {
            return ray_profile(parse_cf(target), T, step, config).dump();
        },
        py::arg("target"), py::arg("T") = 12.0, py::arg("step") = 0.25,
        py::arg("config") = LabConfig{},
        "Electric distance profile along the ray toward a continued-fraction target.");
    m.def(
        "separation_profile",
        [](const std::string& f, const std::string& g, int n, const LabConfig& config) {
            return separation_profile(parse_cf(f), parse_cf(g), n, config).dump();
        },
        py::arg("f"), py::arg("g"), py::arg("n") = 40, py::arg("config") = LabConfig{},
        "Gromov products of matched ray samples toward two irrational targets.");
    m.def(
        "qi_audit",
        [](i64 denom_bound, int geodesics, const LabConfig& config) {
            return qi_audit(denom_bound, config, geodesics).dump();
        },
        py::arg("denom_bound") = 21, py::arg("geodesics") = 10, py::arg("config") = LabConfig{},
        "Fits between curve-graph distance and electric apex distance.");
    m.def(
        "segment_accumulation",
        [](const std::string& f, const std::string& g, int n, const LabConfig& config) {
            return segment_accumulation(parse_cf(f), parse_cf(g), n, config).dump();
        },
        py::arg("f"), py::arg("g"), py::arg("n") = 40, py::arg("config") = LabConfig{},
        "Hausdorff profile of cross-ray geodesic segments against the limit line.");
    m.def(
        "boundary_map_audit",
        [](const std::vector<Slope>& seq, const LabConfig& config) {
            return boundary_map_audit(seq, config).dump();
        },
        py::arg("seq"), py::arg("config") = LabConfig{},
        "Divergence in the curve graph vs numeric convergence of slope values.");
}
