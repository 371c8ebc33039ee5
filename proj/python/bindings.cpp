#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "polycurv/curvature.hpp"
#include "polycurv/mixed.hpp"
#include "polycurv/translative.hpp"

namespace py = pybind11;
using namespace polycurv;

namespace {

SpatialRegion region_from_box(const std::optional<std::pair<Vec, Vec>>& box) {
  if (!box) return SpatialRegion::all();
  return SpatialRegion::box(box->first, box->second);
}

SphericalRegion region_from_cap(const std::optional<std::pair<Vec, double>>& cap) {
  if (!cap) return SphericalRegion::all();
  return SphericalRegion::cap(cap->first, cap->second);
}

}  // namespace

PYBIND11_MODULE(_polycurv, m) {
  m.doc() = "Curvature and mixed curvature measures of convex polytopes";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Polytope>(m, "Polytope")
      .def_static(
          "from_vertices",
          [](const std::vector<Vec>& pts) { return Polytope::from_vertices(pts); },
          py::arg("points"), "Convex hull of a full-dimensional point set (d = 2 or 3).")
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices", &Polytope::vertices)
      .def("volume", &Polytope::volume)
      .def("face_count",
           [](const Polytope& p, int j) { return p.faces(j).size(); }, py::arg("dim"))
      .def("__repr__", [](const Polytope& p) {
        return "Polytope(dim=" + std::to_string(p.dim()) +
               ", vertices=" + std::to_string(p.vertices().size()) + ")";
      });

  py::class_<McConfig>(m, "McConfig")
      .def(py::init<>())
      .def_readwrite("samples", &McConfig::samples)
      .def_readwrite("seed", &McConfig::seed);

  m.def(
      "curvature_measure",
      [](const Polytope& p, int k, const std::optional<std::pair<Vec, Vec>>& box,
         const std::optional<std::pair<Vec, double>>& cap, const McConfig& cfg) {
        CurvatureQuery q;
        q.k = k;
        q.b = region_from_box(box);
        q.c = region_from_cap(cap);
        return curvature_measure(p, q, cfg);
      },
      py::arg("polytope"), py::arg("k"), py::arg("box") = std::nullopt,
      py::arg("cap") = std::nullopt, py::arg("config") = McConfig{},
      "Support measure C_k(P; B x C); box is (lo, hi), cap is (axis, angular_radius).");

  m.def("intrinsic_volume", &intrinsic_volume, py::arg("polytope"), py::arg("k"));
  m.def("steiner_volume", &steiner_volume, py::arg("polytope"), py::arg("radius"),
        "Exact volume of the parallel body at the given radius.");
  m.def("external_angle", [](const Polytope& p, int face_dim, int face_idx) {
    return external_angle(p, p.faces(face_dim).at(static_cast<size_t>(face_idx)));
  }, py::arg("polytope"), py::arg("face_dim"), py::arg("face_index"));

  py::class_<MixedContribution>(m, "MixedContribution")
      .def_readonly("face_ids", &MixedContribution::face_ids)
      .def_readonly("gamma", &MixedContribution::gamma)
      .def_readonly("bracket", &MixedContribution::bracket)
      .def_readonly("support", &MixedContribution::support)
      .def_readonly("value", &MixedContribution::value);

  py::class_<MixedMeasureReport>(m, "MixedMeasureReport")
      .def_readonly("value", &MixedMeasureReport::value)
      .def_readonly("std_error", &MixedMeasureReport::std_error)
      .def_readonly("contributions", &MixedMeasureReport::contributions)
      .def_readonly("degenerate_tuples_skipped",
                    &MixedMeasureReport::degenerate_tuples_skipped);

  m.def(
      "mixed_curvature_measure",
      [](const std::vector<Polytope>& bodies, const std::vector<int>& orders,
         const std::optional<std::pair<Vec, double>>& cap, const McConfig& cfg) {
        MixedQuery q;
        q.r = orders;
        q.c = region_from_cap(cap);
        return mixed_curvature_measure(bodies, q, cfg);
      },
      py::arg("bodies"), py::arg("orders"), py::arg("cap") = std::nullopt,
      py::arg("config") = McConfig{},
      "Mixed measure C_{r_1,...,r_q}(P_1,...,P_q) as a sum over face tuples.");

  m.def("mixed_volume", &mixed_volume_via_measures, py::arg("k1"), py::arg("k2"),
        py::arg("alpha"), py::arg("config") = McConfig{},
        "Mixed volume V(K1[alpha], K2[d - alpha]).");

  py::class_<TifSide>(m, "TifSide")
      .def_readonly("value", &TifSide::value)
      .def_readonly("std_error", &TifSide::std_error);

  py::class_<TifReport>(m, "TifReport")
      .def_readonly("lhs", &TifReport::lhs)
      .def_readonly("rhs", &TifReport::rhs)
      .def_property_readonly("rhs_breakdown",
                             [](const TifReport& r) {
                               py::dict out;
                               for (const auto& [orders, value] : r.rhs_breakdown)
                                 out[py::tuple(py::cast(orders))] = value;
                               return out;
                             })
      .def_readonly("empty_translates", &TifReport::empty_translates)
      .def_readonly("degenerate_translates", &TifReport::degenerate_translates)
      .def_readonly("discrepancy", &TifReport::discrepancy)
      .def_readonly("discrepancy_sigma", &TifReport::discrepancy_sigma);

  m.def(
      "translative_check",
      [](const std::vector<Polytope>& bodies, int k, const std::string& integrator,
         double grid_step, const McConfig& cfg) {
        TifSpec spec;
        spec.bodies = bodies;
        spec.k = k;
        if (integrator == "grid")
          spec.integrator = Integrator::Grid;
        else if (integrator != "mc")
          throw ValidationError("translative_check: integrator must be 'mc' or 'grid'");
        spec.grid_step = grid_step;
        spec.mc = cfg;
        return tif_verify(spec);
      },
      py::arg("bodies"), py::arg("k"), py::arg("integrator") = "mc",
      py::arg("grid_step") = 0.05, py::arg("config") = McConfig{},
      "Integrate C_k over translations and compare with the face-tuple expansion.");
}
