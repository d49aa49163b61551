// Python bindings for the carkit core. Thin: every operation delegates to
// the C++ library; conversions are numpy <-> Eigen and dict <-> term table.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "carkit/algebra.hpp"
#include "carkit/morphisms.hpp"
#include "carkit/repr.hpp"
#include "carkit/space.hpp"
#include "carkit/suites.hpp"

namespace py = pybind11;
using namespace carkit;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Selfdual CAR algebra over a finite-dimensional conjugation space: "
      "Bogoliubov endomorphisms, the even-subalgebra isomorphism family, "
      "left inverses, a Jordan-Wigner matrix backend, and the verification "
      "suites behind the car-verify CLI.";

  m.attr("STRUCTURAL_TOL") = kStructuralTol;
  m.attr("DERIVED_TOL") = kDerivedTol;
  m.attr("OPERATOR_NORM_TOL") = kOperatorNormTol;
  m.attr("MAX_GENERATORS") = kMaxGenerators;

  // space
  m.def("basis_vector", &basis_vector, py::arg("m"), py::arg("j"),
        "Standard basis vector e_j (1-based) of the m-dimensional space.");
  m.def("conjugate", &conjugate, py::arg("k"),
        "Componentwise complex conjugation.");
  m.def("inner", &inner, py::arg("a"), py::arg("b"),
        "Inner product, conjugate-linear in the first argument.");

  py::class_<Isometry>(m, "Isometry",
                       "Conjugation-commuting linear isometry; a real matrix "
                       "with orthonormal columns.")
      .def(py::init<Eigen::MatrixXd>(), py::arg("matrix"))
      .def_static("identity", &Isometry::identity, py::arg("m"))
      .def_property_readonly("domain_dim", &Isometry::domain_dim)
      .def_property_readonly("codomain_dim", &Isometry::codomain_dim)
      .def_property_readonly("matrix", &Isometry::matrix)
      .def("apply", &Isometry::apply, py::arg("k"))
      .def("__matmul__",
           [](const Isometry& w, const Isometry& v) { return compose(w, v); })
      .def("__repr__", [](const Isometry& v) {
        return "Isometry(" + std::to_string(v.domain_dim()) + " -> " +
               std::to_string(v.codomain_dim()) + ")";
      });

  m.def("fredholm_index", &fredholm_index, py::arg("v"),
        "ind V = dim(domain) - dim(codomain).");
  m.def("shift_isometry", &shift_isometry, py::arg("m"),
        "e_j -> e_{j+1}; canonical index -1 witness.");
  m.def("random_isometry", &random_isometry, py::arg("m_in"), py::arg("m_out"),
        py::arg("seed"), "Seeded QR-orthonormalized Gaussian isometry.");
  m.def("compose", &compose, py::arg("w"), py::arg("v"));
  m.def("kernel_selfconjugate_unit", &kernel_selfconjugate_unit, py::arg("v"),
        "For ind V = -1: the self-conjugate unit spanning ker V*.");
  m.def("polarization_basis", &polarization_basis, py::arg("m"),
        "f_a = (e_{2a-1} + i e_{2a})/sqrt(2), m even.");

  // algebra
  py::enum_<Grade>(m, "Grade")
      .value("even", Grade::even)
      .value("odd", Grade::odd);

  py::class_<AlgElement>(
      m, "AlgElement",
      "Element of the selfdual CAR algebra C(K_m): a sparse table "
      "{mask -> coefficient} over ordered Majorana monomials c_S.")
      .def(py::init<int>(), py::arg("dim"))
      .def_static("zero", &AlgElement::zero, py::arg("dim"))
      .def_static("unit", &AlgElement::unit, py::arg("dim"))
      .def_static("monomial", &AlgElement::monomial, py::arg("dim"),
                  py::arg("mask"), py::arg("coeff") = Complex(1.0))
      .def_static("generator", &AlgElement::generator, py::arg("dim"),
                  py::arg("j"), "Majorana generator c_j, 1-based.")
      .def_property_readonly("dim", &AlgElement::dim)
      .def_property_readonly("terms",
                             [](const AlgElement& a) { return a.terms(); })
      .def("coeff", &AlgElement::coeff, py::arg("mask"))
      .def("is_zero", &AlgElement::is_zero)
      .def("term_count", &AlgElement::term_count)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Complex())
      .def(Complex() * py::self)
      .def(-py::self)
      .def("__repr__", &AlgElement::to_string);

  m.def("b_of", &b_of, py::arg("k"),
        "Generator element B(k) = sum_j k_j c_j / sqrt(2).");
  m.def("adjoint", &adjoint, py::arg("a"));
  m.def("gamma",
        static_cast<AlgElement (*)(const AlgElement&)>(&carkit::gamma),
        py::arg("a"), "Grading automorphism.");
  m.def("grade_project", &grade_project, py::arg("a"), py::arg("g"));
  m.def("trace", &trace, py::arg("a"), "Normalized trace.");
  m.def("max_coeff_distance", &max_coeff_distance, py::arg("a"), py::arg("b"));
  m.def("approx_eq", &approx_eq, py::arg("a"), py::arg("b"),
        py::arg("tol") = kStructuralTol);
  m.def("random_element", &random_element, py::arg("dim"),
        py::arg("max_degree"), py::arg("seed"));
  m.def("split_off_generator", &split_off_generator, py::arg("a"),
        py::arg("j"), "Unique split a = x + c_j y with x, y free of c_j.");
  m.def("car_annihilator", &car_annihilator, py::arg("f"));
  m.def("car_creator", &car_creator, py::arg("f"));
  m.def("element_to_json", &element_to_json, py::arg("a"));
  m.def("element_from_json", &element_from_json, py::arg("text"));

  // morphisms
  py::enum_<KSign>(m, "KSign")
      .value("canonical", KSign::canonical)
      .value("flipped", KSign::flipped);

  py::class_<OddUnitary>(m, "OddUnitary",
                         "k_V: odd, selfadjoint-antisymmetric (k* = -k, "
                         "k^2 = -1), anticommuting with the odd image.")
      .def_readonly("vector", &OddUnitary::vector)
      .def_readonly("element", &OddUnitary::element);

  py::class_<TwistUnitary>(m, "TwistUnitary",
                           "u_V = (1 + k_V)/sqrt(2); unitary with u^2 = k_V.")
      .def_readonly("element", &TwistUnitary::element);

  py::class_<Decomposition>(
      m, "Decomposition",
      "a = a0 + k_V a1 + b1 with a0, a1 in the even image and b1 odd.")
      .def_readonly("a0", &Decomposition::a0)
      .def_readonly("a1", &Decomposition::a1)
      .def_readonly("b1", &Decomposition::b1);

  py::class_<HomomorphismTable>(
      m, "HomomorphismTable",
      "Memoized unital *-homomorphism determined by generator images.")
      .def(py::init<int, std::vector<AlgElement>>(), py::arg("domain_dim"),
           py::arg("generator_images"))
      .def_property_readonly("domain_dim", &HomomorphismTable::domain_dim)
      .def_property_readonly("codomain_dim", &HomomorphismTable::codomain_dim)
      .def("image", &HomomorphismTable::image, py::arg("mask"),
           py::return_value_policy::copy)
      .def("apply", &HomomorphismTable::apply, py::arg("a"));

  m.def("rho", &rho, py::arg("v"), py::arg("a"),
        "Bogoliubov endomorphism: B(k) -> B(Vk).");
  m.def("rho_table", &rho_table, py::arg("v"));
  m.def("k_element", &k_element, py::arg("v"),
        py::arg("sign") = KSign::canonical,
        "Odd unitary k_V built from the kernel unit of V*.");
  m.def("u_element", &u_element, py::arg("v"),
        py::arg("sign") = KSign::canonical);
  m.def("sigma", &sigma, py::arg("v"), py::arg("a"),
        py::arg("sign") = KSign::canonical,
        "Even-image isomorphism: sigma_V = Ad(u_V) o rho_V.");
  m.def("sigma_table", &sigma_table, py::arg("v"),
        py::arg("sign") = KSign::canonical);
  m.def("image_is_even_subalgebra", &image_is_even_subalgebra, py::arg("v"),
        py::arg("tol") = kDerivedTol,
        "Monomial images are even and span the full even subalgebra.");
  m.def("decompose", &decompose, py::arg("v"), py::arg("a"));
  m.def("sigma_left_inverse", &sigma_left_inverse, py::arg("v"), py::arg("a"),
        "phi_V: inverts sigma_V on its image, annihilates the odd rest.");
  m.def("rho_left_inverse", &rho_left_inverse, py::arg("v"), py::arg("a"),
        "Phi_V(a) = phi_V(u_V a u_V*); left inverse of rho_V.");
  m.def("cond_expect", &cond_expect, py::arg("v"), py::arg("a"),
        "sigma_V o phi_V; equals the grading mean (a + gamma(a))/2.");
  m.def("stat_dimension", &stat_dimension, py::arg("v"),
        "sqrt of the image dimension ratio; sqrt(2) at index -1.");
  m.def("image_dimension_ratio", &image_dimension_ratio, py::arg("v"),
        "2^{-ind V}, exact dyadic.");
  m.def("transport_unitary", &transport_unitary, py::arg("v"),
        py::arg("v_prime"),
        "Orthogonal U with UV = V' and Ue = e'; Ad-covariance carrier.");
  m.def("intertwiner_identity_error", &intertwiner_identity_error,
        py::arg("w"), py::arg("v"));
  m.def("intertwiner_identity_check", &intertwiner_identity_check,
        py::arg("w"), py::arg("v"), py::arg("tol") = kDerivedTol,
        "rho_W o sigma_V = Ad(rho_W(u_V)) o rho_{WV} on generators.");

  // matrix backend
  m.def("qubit_count", &qubit_count, py::arg("m"));
  m.def("jw_generator", &jw_generator, py::arg("j"), py::arg("m"),
        "Jordan-Wigner image of c_j on ceil(m/2) qubits.");
  m.def("represent", &represent, py::arg("a"),
        "Faithful *-homomorphism into 2^n x 2^n matrices.");
  m.def("operator_norm", &operator_norm, py::arg("a"),
        "C*-norm: largest singular value of represent(a).");
  m.def("vacuum", &vacuum, py::arg("m"),
        "Fock vacuum of the standard polarization, m even.");
  m.def("max_entry_distance", &max_entry_distance, py::arg("a"), py::arg("b"));
  m.def("intertwiner_identity_matrix_error",
        &intertwiner_identity_matrix_error, py::arg("w"), py::arg("v"));
  m.def("intertwiner_identity_matrix_check",
        &intertwiner_identity_matrix_check, py::arg("w"), py::arg("v"),
        py::arg("tol") = kDerivedTol);

  // suites
  py::enum_<SuiteId>(m, "SuiteId")
      .value("proposition", SuiteId::proposition)
      .value("remark1", SuiteId::remark1)
      .value("remark2", SuiteId::remark2)
      .value("remark3", SuiteId::remark3)
      .value("remark4", SuiteId::remark4)
      .value("oracle", SuiteId::oracle);

  py::enum_<ReportFormat>(m, "ReportFormat")
      .value("json", ReportFormat::json)
      .value("text", ReportFormat::text);

  py::class_<SuiteConfig>(m, "SuiteConfig")
      .def(py::init<>())
      .def_readwrite("dim_in", &SuiteConfig::dim_in)
      .def_readwrite("trials", &SuiteConfig::trials)
      .def_readwrite("seed", &SuiteConfig::seed)
      .def_readwrite("tol", &SuiteConfig::tol)
      .def_readwrite("format", &SuiteConfig::format)
      .def_readwrite("suites", &SuiteConfig::suites);

  py::class_<CheckRecord>(m, "CheckRecord")
      .def_readonly("name", &CheckRecord::name)
      .def_readonly("dim", &CheckRecord::dim)
      .def_readonly("seed", &CheckRecord::seed)
      .def_readonly("passed", &CheckRecord::passed)
      .def_readonly("max_error", &CheckRecord::max_error)
      .def_readonly("elapsed_ms", &CheckRecord::elapsed_ms)
      .def("__repr__", [](const CheckRecord& r) {
        return "CheckRecord(" + r.name + ", dim=" + std::to_string(r.dim) +
               ", " + (r.passed ? "passed" : "failed") + ")";
      });

  py::class_<Report>(m, "Report").def_readonly("checks", &Report::checks);

  m.def("all_suites", &all_suites,
        py::return_value_policy::reference_internal);
  m.def("suite_name",
        [](SuiteId id) { return std::string(suite_name(id)); }, py::arg("id"));
  m.def("suite_from_name",
        [](const std::string& name) { return suite_from_name(name); },
        py::arg("name"));
  m.def("run_suite", &run_suite, py::arg("cfg"),
        "Runs the selected suites; raises ValueError on a bad config.");
  m.def("bench_multiply", &bench_multiply, py::arg("dim"), py::arg("density"),
        py::arg("reps"), py::arg("seed"));
  m.def("emit_report", &emit_report, py::arg("report"), py::arg("format"));
  m.def("all_passed", &all_passed, py::arg("report"));
}
