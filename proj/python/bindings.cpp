#include "cmgeo/cross_polytope.hpp"
#include "cmgeo/distance_core.hpp"
#include "cmgeo/mapping.hpp"
#include "cmgeo/rational.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// cmgeo::Rational <-> fractions.Fraction. Accepts int, str ("p/q") and
// Fraction on the way in; floats are rejected so exactness is never lost
// silently. Always returns a Fraction.
template <>
struct type_caster<cmgeo::Rational> {
  PYBIND11_TYPE_CASTER(cmgeo::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (py::isinstance<py::float_>(src)) return false;
    const bool fraction_like =
        py::hasattr(src, "numerator") && py::hasattr(src, "denominator");
    if (!py::isinstance<py::int_>(src) && !py::isinstance<py::str>(src) && !fraction_like) {
      return false;
    }
    try {
      value = cmgeo::parse_rational(py::str(src).cast<std::string>());
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }

  static handle cast(const cmgeo::Rational& src, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(cmgeo::format_rational(src))).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<cmgeo::Rational>> matrix_rows(const cmgeo::RationalMatrix& m) {
  std::vector<std::vector<cmgeo::Rational>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  }
  return rows;
}

std::string flatness_token(cmgeo::Flatness kind) {
  switch (kind) {
    case cmgeo::Flatness::flat: return "flat";
    case cmgeo::Flatness::full_dimensional: return "full_dimensional";
    case cmgeo::Flatness::not_realizable: return "not_realizable";
  }
  return "not_realizable";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact distance geometry: Cayley-Menger determinants, embedding dimension, "
            "cross-polytope flatness and two-distance mapping checks.";

  using cmgeo::Rational;
  using cmgeo::SquaredDistanceMatrix;

  py::class_<SquaredDistanceMatrix>(m, "SquaredDistanceMatrix")
      .def(py::init([](const std::vector<std::vector<Rational>>& rows) {
             return SquaredDistanceMatrix::from_rows(rows);
           }),
           py::arg("rows"),
           "Build from a full square list of squared distances (ints, 'p/q' strings or "
           "Fractions).")
      .def_property_readonly("points", &SquaredDistanceMatrix::points)
      .def("entry", &SquaredDistanceMatrix::operator(), py::arg("i"), py::arg("j"))
      .def("rows", [](const SquaredDistanceMatrix& d) { return matrix_rows(d.entries()); })
      .def("subset",
           [](const SquaredDistanceMatrix& d, const std::vector<std::size_t>& indices) {
             return d.subset(indices);
           },
           py::arg("indices"))
      .def("permuted",
           [](const SquaredDistanceMatrix& d, const std::vector<std::size_t>& perm) {
             return d.permuted(perm);
           },
           py::arg("perm"))
      .def("scaled", &SquaredDistanceMatrix::scaled, py::arg("factor"))
      .def("__repr__", [](const SquaredDistanceMatrix& d) {
        return "SquaredDistanceMatrix(points=" + std::to_string(d.points()) + ")";
      });

  py::class_<cmgeo::InertiaSignature>(m, "InertiaSignature")
      .def_readonly("positive", &cmgeo::InertiaSignature::positive)
      .def_readonly("negative", &cmgeo::InertiaSignature::negative)
      .def_readonly("zero", &cmgeo::InertiaSignature::zero)
      .def("__repr__", [](const cmgeo::InertiaSignature& s) {
        return "InertiaSignature(positive=" + std::to_string(s.positive) +
               ", negative=" + std::to_string(s.negative) +
               ", zero=" + std::to_string(s.zero) + ")";
      });

  py::class_<cmgeo::Realization>(m, "Realization")
      .def_readonly("dimension", &cmgeo::Realization::dimension)
      .def_readonly("coordinates", &cmgeo::Realization::coordinates)
      .def_readonly("max_residual", &cmgeo::Realization::max_residual)
      .def("__repr__", [](const cmgeo::Realization& r) {
        return "Realization(dimension=" + std::to_string(r.dimension) + ")";
      });

  py::class_<cmgeo::FlatnessVerdict>(m, "FlatnessVerdict")
      .def_property_readonly("kind",
                             [](const cmgeo::FlatnessVerdict& v) { return flatness_token(v.kind); })
      .def_readonly("dimension", &cmgeo::FlatnessVerdict::dimension)
      .def_readonly("cm_det", &cmgeo::FlatnessVerdict::cm_det)
      .def_readonly("closed_form", &cmgeo::FlatnessVerdict::closed_form)
      .def("__repr__", [](const cmgeo::FlatnessVerdict& v) {
        return "FlatnessVerdict(kind='" + flatness_token(v.kind) + "')";
      });

  py::class_<cmgeo::ClosedFormCheck>(m, "ClosedFormCheck")
      .def_readonly("cm_det", &cmgeo::ClosedFormCheck::cm_det)
      .def_readonly("closed_form", &cmgeo::ClosedFormCheck::closed_form)
      .def_readonly("equal", &cmgeo::ClosedFormCheck::equal);

  py::class_<cmgeo::MappingReport>(m, "MappingReport")
      .def_readonly("c_sq", &cmgeo::MappingReport::c_sq)
      .def_readonly("s_sq", &cmgeo::MappingReport::s_sq)
      .def_readonly("ratio_sq", &cmgeo::MappingReport::ratio_sq)
      .def_readonly("threshold_passed", &cmgeo::MappingReport::threshold_passed)
      .def_readonly("bridge_ok", &cmgeo::MappingReport::bridge_ok)
      .def_readonly("construction_dimension", &cmgeo::MappingReport::construction_dimension)
      .def_readonly("cross_polytope_flat", &cmgeo::MappingReport::cross_polytope_flat)
      .def_readonly("isometry_criterion", &cmgeo::MappingReport::isometry_criterion);

  m.def("cm_matrix",
        [](const SquaredDistanceMatrix& d) { return matrix_rows(cmgeo::cm_matrix(d)); },
        py::arg("d"), "Bordered Cayley-Menger matrix as nested lists of Fractions.");
  m.def("cm_determinant", &cmgeo::cm_determinant, py::arg("d"));
  m.def("simplex_volume_sq", &cmgeo::simplex_volume_sq, py::arg("d"));
  m.def("gram_matrix",
        [](const SquaredDistanceMatrix& d, std::size_t anchor) {
          return matrix_rows(cmgeo::gram_matrix(d, anchor));
        },
        py::arg("d"), py::arg("anchor") = 0);
  m.def("inertia",
        [](const std::vector<std::vector<Rational>>& rows) {
          return cmgeo::inertia(cmgeo::RationalMatrix::from_rows(rows));
        },
        py::arg("rows"), "Inertia signature of a symmetric matrix given as nested lists.");
  m.def("embedding_dimension", &cmgeo::embedding_dimension, py::arg("d"),
        "Minimal embedding dimension, or None when not realizable.");
  m.def("realize_floating", &cmgeo::realize_floating, py::arg("d"));

  m.def("cross_distance_matrix",
        [](std::size_t n, const Rational& a_sq, const Rational& b_sq) {
          return cmgeo::cross_distance_matrix(cmgeo::CrossPolytopeSpec(n, a_sq, b_sq));
        },
        py::arg("n"), py::arg("a_sq"), py::arg("b_sq"));
  m.def("closed_form_determinant",
        [](std::size_t n, const Rational& a_sq, const Rational& b_sq) {
          return cmgeo::closed_form_determinant(cmgeo::CrossPolytopeSpec(n, a_sq, b_sq));
        },
        py::arg("n"), py::arg("a_sq"), py::arg("b_sq"));
  m.def("verify_closed_form",
        [](std::size_t n, const Rational& a_sq, const Rational& b_sq) {
          return cmgeo::verify_closed_form(cmgeo::CrossPolytopeSpec(n, a_sq, b_sq));
        },
        py::arg("n"), py::arg("a_sq"), py::arg("b_sq"));
  m.def("classify_flatness",
        [](std::size_t n, const Rational& a_sq, const Rational& b_sq) {
          return cmgeo::classify_flatness(cmgeo::CrossPolytopeSpec(n, a_sq, b_sq));
        },
        py::arg("n"), py::arg("a_sq"), py::arg("b_sq"));
  m.def("pentagon_cm_det", &cmgeo::pentagon_cm_det, py::arg("a_sq"), py::arg("d_sq"));
  m.def("pentagon_flat_diagonal", &cmgeo::pentagon_flat_diagonal, py::arg("a_sq"),
        py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-9);

  m.def("circumradius_sq", &cmgeo::circumradius_sq, py::arg("k"), py::arg("edge_sq"));
  m.def("construction_distance_matrix",
        [](std::size_t n, const Rational& a_sq) {
          return cmgeo::construction_distance_matrix(cmgeo::MappingScenario(n, a_sq));
        },
        py::arg("n"), py::arg("a_sq"));
  m.def("verify_bridge",
        [](std::size_t n, const Rational& a_sq) {
          return cmgeo::verify_bridge(cmgeo::MappingScenario(n, a_sq));
        },
        py::arg("n"), py::arg("a_sq"));
  m.def("cable_strut_passes", &cmgeo::cable_strut_passes, py::arg("n"));
  m.def("fold_distance_sq",
        [](std::size_t n, const Rational& a_sq, const Rational& t) {
          return cmgeo::fold_distance_sq(cmgeo::MappingScenario(n, a_sq), t);
        },
        py::arg("n"), py::arg("a_sq"), py::arg("t"));
  m.def("mapping_report",
        [](std::size_t n, const Rational& a_sq) {
          return cmgeo::mapping_report(cmgeo::MappingScenario(n, a_sq));
        },
        py::arg("n"), py::arg("a_sq"));
}
