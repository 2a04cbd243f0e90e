#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "realop/error.hpp"
#include "realop/geometry.hpp"
#include "realop/io.hpp"
#include "realop/numrange.hpp"
#include "realop/operator.hpp"
#include "realop/sampling.hpp"
#include "realop/spectrum.hpp"
#include "realop/verify.hpp"

namespace py = pybind11;
using namespace realop;

namespace {

std::vector<Complex> vertices_of(const ConvexRegion& region) { return region.vertices(); }

ConvexRegion region_from(const std::vector<Complex>& points) { return convex_hull(points); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real linear operators on C^n: numerical ranges and spectra";

  py::register_exception<Error>(m, "RealopError", PyExc_ValueError);

  py::class_<RealLinearOperator>(m, "Operator")
      .def(py::init<ComplexMatrix, ComplexMatrix>(), py::arg("T"), py::arg("A"))
      .def_static("identity", &RealLinearOperator::identity, py::arg("dim"))
      .def_static("zero", &RealLinearOperator::zero, py::arg("dim"))
      .def_static("conjugation", &RealLinearOperator::conjugation, py::arg("dim"))
      .def_property_readonly("dim", &RealLinearOperator::dim)
      .def_property_readonly("T", &RealLinearOperator::linear)
      .def_property_readonly("A", &RealLinearOperator::antilinear)
      .def("__call__", [](const RealLinearOperator& op, const ComplexVector& x) { return realop::apply(op, x); })
      .def("__matmul__", [](const RealLinearOperator& a, const RealLinearOperator& b) { return compose(a, b); })
      .def("__add__", &RealLinearOperator::operator+)
      .def("__sub__", &RealLinearOperator::operator-)
      .def("__mul__", &RealLinearOperator::operator*)
      .def("__rmul__", &RealLinearOperator::operator*)
      .def("adjoint", [](const RealLinearOperator& op) { return adjoint(op); })
      .def("norm", [](const RealLinearOperator& op) { return operator_norm(op); })
      .def("is_self_adjoint", [](const RealLinearOperator& op, double tol) { return is_self_adjoint(op, tol); },
           py::arg("tol") = 1e-12)
      .def("realify", [](const RealLinearOperator& op) { return realify(op).matrix; })
      .def("__repr__", [](const RealLinearOperator& op) {
        return "<realop.Operator dim=" + std::to_string(op.dim()) + ">";
      });

  m.def("inner", &inner, py::arg("u"), py::arg("v"));
  m.def("decompose", &decompose, py::arg("action"), py::arg("dim"),
        "Recover (T, A) from a Python callable acting on complex vectors.");
  m.def("self_adjoint_split", &self_adjoint_split, py::arg("op"));
  m.def("scalar_pencil", [](Complex lambda, Eigen::Index dim) { return scalar_pencil(lambda, dim).matrix; },
        py::arg("lam"), py::arg("dim"));

  m.def("unit_sphere_sample",
        [](std::uint64_t seed, Eigen::Index dim, std::uint64_t k) { return unit_sphere_sample({seed, dim}, k); },
        py::arg("seed"), py::arg("dim"), py::arg("k"));

  m.def("disk_at",
        [](const RealLinearOperator& op, const ComplexVector& x) {
          const Disk d = disk_at(op, x);
          return py::make_tuple(d.center, d.radius);
        },
        py::arg("op"), py::arg("x"));
  m.def("numerical_range",
        [](const RealLinearOperator& op, std::size_t n_samples, std::size_t circle_points, std::uint64_t seed) {
          return vertices_of(sample_range(op, {n_samples, circle_points, seed}));
        },
        py::arg("op"), py::arg("n_samples") = 1000, py::arg("circle_points") = 256,
        py::arg("seed") = kDefaultSeed, "Vertices (counter-clockwise) of the sampled numerical range.");
  m.def("radius_bounds",
        [](const RealLinearOperator& op) {
          const auto b = radius_bounds(op);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("op"));
  m.def("convex_hull", [](const std::vector<Complex>& pts) { return vertices_of(region_from(pts)); },
        py::arg("points"));
  m.def("hausdorff_distance",
        [](const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t samples) {
          return hausdorff_distance(region_from(a), region_from(b), samples);
        },
        py::arg("a"), py::arg("b"), py::arg("samples") = 1000);
  m.def("numerical_radius", [](const std::vector<Complex>& v) { return numerical_radius_estimate(region_from(v)); },
        py::arg("vertices"));

  m.def("sigma_min", &sigma_min_at, py::arg("op"), py::arg("lam"));
  m.def("eigen_check", &eigen_check, py::arg("op"), py::arg("lam"), py::arg("tol"));
  m.def("scan",
        [](const RealLinearOperator& op, std::optional<std::tuple<double, double, double, double>> rect,
           std::optional<double> step, std::optional<double> tol) {
          ScanOptions opt;
          if (rect) {
            const auto [a, b, c, d] = *rect;
            opt.rect = Rect{a, b, c, d};
          }
          opt.step = step;
          opt.tol = tol;
          const SpectralScan sc = scan(op, opt);
          py::array_t<double> grid({sc.n_im, sc.n_re});
          std::copy(sc.sigma_min_grid.begin(), sc.sigma_min_grid.end(), grid.mutable_data());
          py::list detected;
          for (const auto& p : sc.detected) detected.append(py::make_tuple(p.lambda, p.sigma_min));
          py::dict out;
          out["rect"] = py::make_tuple(sc.rect.re_min, sc.rect.re_max, sc.rect.im_min, sc.rect.im_max);
          out["step"] = sc.step;
          out["tol"] = sc.tol;
          out["grid"] = grid;
          out["detected"] = detected;
          out["empty_spectrum"] = sc.empty_spectrum();
          out["min_sigma"] = sc.min_grid_value();
          return out;
        },
        py::arg("op"), py::arg("rect") = py::none(), py::arg("step") = py::none(), py::arg("tol") = py::none());

  m.def("example", [](const std::string& name, std::optional<Eigen::Index> dim) { return builtin_example(name, dim).op; },
        py::arg("name"), py::arg("dim") = py::none());
  m.def("example_names", &builtin_example_names);
  m.def("parse_operator", [](const std::string& text) { return parse_operator_spec(text).op; }, py::arg("text"));
  m.def("load_operator", [](const std::string& path) { return read_operator_spec(path).op; }, py::arg("path"));

  m.def("render_svg",
        [](const std::vector<Complex>& hull, const std::vector<std::pair<Complex, double>>& circles,
           const std::vector<Complex>& markers, const std::string& title) {
          SvgScene scene;
          scene.hull = hull;
          for (const auto& [c, r] : circles) scene.circles.push_back({c, r});
          scene.markers = markers;
          scene.title = title;
          return render_svg(scene);
        },
        py::arg("hull"), py::arg("circles") = std::vector<std::pair<Complex, double>>{},
        py::arg("markers") = std::vector<Complex>{}, py::arg("title") = "");

  m.def("run_verify",
        [](std::uint64_t seed, int trials) {
          VerifyOptions opt;
          opt.seed = seed;
          opt.trials = trials;
          py::gil_scoped_release release;
          return run_verify(opt).to_json().dump();
        },
        py::arg("seed") = kDefaultSeed, py::arg("trials") = 20,
        "JSON text of the verification report.");

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
