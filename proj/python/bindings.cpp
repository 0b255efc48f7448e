#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "hausdim/cli.hpp"
#include "hausdim/covering.hpp"
#include "hausdim/dimension.hpp"
#include "hausdim/errors.hpp"
#include "hausdim/ifs.hpp"
#include "hausdim/ifs_io.hpp"
#include "hausdim/measure.hpp"
#include "hausdim/render.hpp"

namespace py = pybind11;
using namespace hausdim;

namespace {

std::vector<Point> to_points(const std::vector<std::vector<double>>& coords) {
    std::vector<Point> points;
    points.reserve(coords.size());
    for (const auto& c : coords) points.emplace_back(std::span<const double>(c));
    return points;
}

std::vector<std::vector<double>> from_points(const std::vector<Point>& points) {
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const auto& p : points) out.emplace_back(p.coords().begin(), p.coords().end());
    return out;
}

std::vector<double> coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hausdorff and similarity dimensions of self-similar sets";

    auto base = py::register_exception<Error>(m, "HausdimError");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
    py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<AxisBox>(m, "AxisBox")
        .def(py::init([](const std::vector<double>& lo, const std::vector<double>& hi) {
                 return AxisBox(Point(std::span<const double>(lo)), Point(std::span<const double>(hi)));
             }),
             py::arg("lo"), py::arg("hi"))
        .def_static("interval", &AxisBox::interval)
        .def_static("rect", &AxisBox::rect)
        .def_property_readonly("dim", &AxisBox::dim)
        .def_property_readonly("lo", [](const AxisBox& b) { return coords(b.lo()); })
        .def_property_readonly("hi", [](const AxisBox& b) { return coords(b.hi()); })
        .def_property_readonly("diameter", [](const AxisBox& b) { return diameter(b); })
        .def("__repr__", [](const AxisBox& b) { return "AxisBox" + format_open_box(b); });

    py::class_<Similitude>(m, "Similitude")
        .def(py::init([](double ratio, double rotation, bool reflect,
                         const std::vector<double>& translation) {
                 return Similitude(ratio, rotation, reflect,
                                   Point(std::span<const double>(translation)));
             }),
             py::arg("ratio"), py::arg("rotation") = 0.0, py::arg("reflect") = false,
             py::arg("translation"))
        .def_property_readonly("ratio", &Similitude::ratio)
        .def_property_readonly("rotation", &Similitude::rotation)
        .def_property_readonly("reflect", &Similitude::reflect)
        .def_property_readonly("translation",
                               [](const Similitude& f) { return coords(f.translation()); })
        .def("__call__", [](const Similitude& f, const std::vector<double>& x) {
            return coords(apply(f, Point(std::span<const double>(x))));
        });

    py::class_<Ifs>(m, "Ifs")
        .def(py::init<std::vector<Similitude>, std::vector<double>, const AxisBox&>(),
             py::arg("maps"), py::arg("weights"), py::arg("seed_box"))
        .def_property_readonly("maps", &Ifs::maps)
        .def_property_readonly("weights", &Ifs::weights)
        .def_property_readonly("seed_box", &Ifs::seed_box)
        .def_property_readonly("dim", &Ifs::dim)
        .def("ratios", &Ifs::ratios)
        .def("__len__", &Ifs::size);

    py::enum_<Method>(m, "Method")
        .value("closed_form", Method::closed_form)
        .value("moran_root", Method::moran_root)
        .value("boxcount_regression", Method::boxcount_regression)
        .value("bound_certificate", Method::bound_certificate);

    py::class_<DimensionEstimate>(m, "DimensionEstimate")
        .def_readonly("value", &DimensionEstimate::value)
        .def_readonly("method", &DimensionEstimate::method)
        .def_readonly("uncertainty", &DimensionEstimate::uncertainty)
        .def_readonly("metadata", &DimensionEstimate::metadata)
        .def_property_readonly("certified", [](const DimensionEstimate& e) { return is_certified(e); });

    py::class_<OscReport>(m, "OscReport")
        .def_readonly("satisfied", &OscReport::satisfied)
        .def_readonly("witness", &OscReport::witness)
        .def_property_readonly("violation", [](const OscReport& r) -> py::object {
            if (!r.violation) return py::none();
            const char* kind =
                r.violation->kind == OscViolation::Kind::overlap ? "overlap" : "not_contained";
            return py::make_tuple(kind, r.violation->first, r.violation->second);
        });

    py::class_<MassBound>(m, "MassBound")
        .def_readonly("lower", &MassBound::lower)
        .def_readonly("upper", &MassBound::upper);

    py::class_<MddCertificate>(m, "MddCertificate")
        .def_readonly("s", &MddCertificate::s)
        .def_readonly("c", &MddCertificate::c)
        .def_readonly("samples", &MddCertificate::samples)
        .def_readonly("delta_min", &MddCertificate::delta_min)
        .def_readonly("delta_max", &MddCertificate::delta_max)
        .def_readonly("rng_seed", &MddCertificate::rng_seed)
        .def_readonly("implied_measure_lower_bound", &MddCertificate::implied_measure_lower_bound);

    m.def("cantor_preset", &cantor_preset, py::arg("alpha") = 1.0 / 3.0);
    m.def("square_preset", &square_preset);
    m.def("parse_ifs", py::overload_cast<std::string_view>(&parse_ifs), py::arg("text"));
    m.def("to_ifs_text", &to_ifs_text);
    m.def("powered_system", &powered_system, py::arg("ifs"), py::arg("k"));

    m.def("refine", [](const Ifs& ifs, std::size_t depth) {
        std::vector<AxisBox> boxes;
        for (const auto& c : refine(ifs, depth).cells) boxes.push_back(c.box);
        return boxes;
    }, py::arg("ifs"), py::arg("depth"));
    m.def("chaos_game", [](const Ifs& ifs, std::size_t count, std::uint64_t seed) {
        return from_points(chaos_game(ifs, count, seed));
    }, py::arg("ifs"), py::arg("count"), py::arg("seed"));

    m.def("moran_value", [](const std::vector<double>& r, double s) { return moran_value(r, s); },
          py::arg("ratios"), py::arg("s"));
    m.def("similarity_dimension",
          [](const std::vector<double>& r) { return similarity_dimension(r); }, py::arg("ratios"));
    m.def("similarity_dimension", py::overload_cast<const Ifs&>(&similarity_dimension),
          py::arg("ifs"));
    m.def("check_osc", &check_osc, py::arg("ifs"), py::arg("candidate"));
    m.def("hausdorff_dimension_via_similarity", &hausdorff_dimension_via_similarity,
          py::arg("ifs"), py::arg("candidate"));

    m.def("natural_cover_sum", [](const Ifs& ifs, std::size_t depth, double s) {
        return cover_sum(natural_cover(ifs, depth), s).value;
    }, py::arg("ifs"), py::arg("depth"), py::arg("s"));
    m.def("upper_bound_exponent", [](const Ifs& ifs, const std::vector<std::size_t>& depths,
                                     double tolerance) {
        return upper_bound_exponent(ifs, depths, tolerance);
    }, py::arg("ifs"), py::arg("depths"), py::arg("tolerance") = 1e-10);
    m.def("box_count", [](const std::vector<std::vector<double>>& pts, double delta) {
        return box_count(to_points(pts), delta);
    }, py::arg("points"), py::arg("delta"));
    m.def("boxcount_dimension", [](const std::vector<std::vector<double>>& pts,
                                   const std::vector<double>& deltas) {
        return boxcount_dimension(to_points(pts), deltas);
    }, py::arg("points"), py::arg("deltas"));

    m.def("mu_box", [](const Ifs& ifs, const AxisBox& u, std::size_t max_depth) {
        return mu_box(SelfSimilarMeasure(ifs), u, max_depth);
    }, py::arg("ifs"), py::arg("box"), py::arg("max_depth"));
    m.def("lebesgue_square_mass", &lebesgue_square_mass);
    m.def("mdd_check", [](const std::function<double(const AxisBox&)>& mass, const AxisBox& domain,
                          double s, double dmin, double dmax, std::size_t samples,
                          std::uint64_t seed) {
        return mdd_check(mass, domain, s, {dmin, dmax}, samples, seed);
    }, py::arg("mass"), py::arg("domain"), py::arg("s"), py::arg("delta_min"),
       py::arg("delta_max"), py::arg("samples"), py::arg("seed"));
    m.def("mdd_check_self_similar", [](const Ifs& ifs, double s, double dmin, double dmax,
                                       std::size_t samples, std::uint64_t seed) {
        const SelfSimilarMeasure mu(ifs);
        return mdd_check(upper_mass(mu), ifs.seed_box(), s, {dmin, dmax}, samples, seed);
    }, py::arg("ifs"), py::arg("s"), py::arg("delta_min"), py::arg("delta_max"),
       py::arg("samples"), py::arg("seed"));
    m.def("lower_bound_dimension", &lower_bound_dimension);
    m.def("alpha_constant", &alpha_constant, py::arg("s"));

    m.def("render_svg", &render_svg, py::arg("ifs"), py::arg("depth"));
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
