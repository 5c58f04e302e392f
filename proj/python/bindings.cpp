#include "solvlie/complex/structures.hpp"
#include "solvlie/errors.hpp"
#include "solvlie/frames/frames.hpp"
#include "solvlie/kernel/numeric.hpp"
#include "solvlie/kernel/polynomial.hpp"
#include "solvlie/lattice/examples.hpp"
#include "solvlie/lattice/group.hpp"
#include "solvlie/lie/catalog.hpp"
#include "solvlie/pk/pseudokahler.hpp"
#include "solvlie/winkelmann/h1.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace solvlie;
using cd = std::complex<double>;

namespace {

// Entries may be ints, strings such as "3/4", or fractions.Fraction.
QMatrix to_qmatrix(const std::vector<std::vector<py::object>>& rows) {
  if (rows.empty()) throw DimensionError("empty matrix");
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(py::str(rows[r][c]).cast<std::string>());
  }
  return m;
}

std::vector<std::vector<std::string>> to_strings(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = to_string(m(r, c));
  return out;
}

std::vector<long long> coefficients(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(c.convert_to<long long>());
  return out;
}

const lie::StructureAlgebra& real_form(const std::string& kind) {
  return lie::catalog_entry(lie::parse_algebra_kind(kind)).real_form;
}

py::dict checks_dict(const lattice::CheckList& c) {
  py::dict d;
  for (const auto& [name, ok] : c.items()) d[py::str(name)] = ok;
  return d;
}

py::dict verify(const lattice::LatticeSpec& spec, double tol) {
  py::dict d;
  if (const auto* a = std::get_if<lattice::LatticeSpecAbelian>(&spec)) {
    const auto r = lattice::verify_lattice_abelian(*a, tol);
    d["valid"] = r.valid();
    d["checks"] = checks_dict(r.checks);
  } else if (const auto* n = std::get_if<lattice::LatticeSpecNil>(&spec)) {
    const auto r = lattice::verify_lattice_nil(*n, tol);
    d["valid"] = r.valid();
    d["checks"] = checks_dict(r.checks);
    d["path"] = r.path;
  } else {
    const auto r = lattice::verify_lattice_solv(std::get<lattice::LatticeSpecSolv>(spec), tol);
    d["valid"] = r.valid();
    d["checks"] = checks_dict(r.checks);
    d["lambda"] = r.lambda;
    d["mu"] = r.mu;
    d["generator_determinant"] = r.generator_determinant;
  }
  return d;
}

py::dict h1_dict(const winkelmann::H1Report& r) {
  py::dict d;
  d["dim_h1_lie"] = r.dim_h1_lie;
  d["dim_W"] = r.dim_W;
  d["h1"] = r.h1;
  d["kind"] = lattice::to_string(r.kind);
  return d;
}

// Holder so pybind11 treats a spec as an opaque class rather than converting the variant.
struct Spec {
  lattice::LatticeSpec v;
};

frames::FramePair frame(const Eigen::Matrix2d& q, const Eigen::Matrix4d& p) { return {q, p}; }

}  // namespace

PYBIND11_MODULE(solvlie, m) {
  m.doc() = "Complex solvable Lie groups of dimension 3, their lattices and invariant structures";

  static py::exception<Error> base(m, "SolvlieError");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<DecompositionError>(m, "DecompositionError", base.ptr());
  py::register_exception<NotSubalgebraError>(m, "NotSubalgebraError", base.ptr());
  py::register_exception<ClassificationError>(m, "ClassificationError", base.ptr());
  py::register_exception<CompatibilityError>(m, "CompatibilityError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

  // Kernel
  m.def(
      "char_poly", [](const std::vector<std::vector<long long>>& a) { return coefficients(char_poly(to_int_matrix(a))); },
      "Characteristic polynomial of an integer matrix, lowest degree first.");
  m.def(
      "minimal_poly",
      [](const std::vector<std::vector<long long>>& a) { return coefficients(minimal_poly(to_int_matrix(a))); });
  m.def(
      "poly_roots",
      [](const std::vector<long long>& c, double tol) {
        std::vector<BigInt> big(c.begin(), c.end());
        return poly_roots(IntPolynomial(big), tol);
      },
      py::arg("coefficients"), py::arg("tol") = 1e-9);

  // Algebras
  m.def("catalog_kinds", [] {
    std::vector<std::string> out;
    for (const auto& e : lie::catalog()) out.push_back(lie::to_string(e.kind));
    return out;
  });
  m.def(
      "structure_constants",
      [](const std::string& kind, bool real) {
        const auto& e = lie::catalog_entry(lie::parse_algebra_kind(kind));
        const auto& g = real ? e.real_form : e.complex_algebra;
        py::list out;
        for (const auto& b : g.nonzero_brackets()) {
          std::vector<std::string> v;
          for (const auto& x : b.value) v.push_back(to_string(x));
          out.append(py::make_tuple(b.i, b.j, v));
        }
        return out;
      },
      py::arg("kind"), py::arg("real") = false,
      "Nonzero brackets [e_i, e_j] (i < j) as (i, j, coefficients).");
  m.def("labels", [](const std::string& kind) { return real_form(kind).labels(); });
  m.def("jacobi_check", [](const std::string& kind) { return lie::jacobi_check(real_form(kind)); });
  m.def("is_unimodular", [](const std::string& kind) { return lie::is_unimodular(real_form(kind)); });

  // Complex structures on the real forms
  m.def("standard_structure", [] { return to_strings(cs::standard_structure(6).matrix()); });
  m.def(
      "is_integrable",
      [](const std::string& kind, const std::vector<std::vector<py::object>>& j) {
        return cs::is_integrable(real_form(kind), cs::AlmostComplexStructure(to_qmatrix(j)));
      },
      py::arg("kind"), py::arg("J"));
  m.def(
      "h_is_subalgebra",
      [](const std::string& kind, const std::vector<std::vector<py::object>>& j) {
        const auto& g = real_form(kind);
        return cs::is_subalgebra(lie::ComplexifiedAlgebra(g), cs::h_from_j(g, cs::AlmostComplexStructure(to_qmatrix(j))));
      },
      py::arg("kind"), py::arg("J"));
  m.def(
      "roundtrip",
      [](const std::string& kind, const std::vector<std::vector<py::object>>& j) {
        const auto& g = real_form(kind);
        const cs::AlmostComplexStructure s(to_qmatrix(j));
        return to_strings(cs::j_from_subspace(cs::h_from_j(g, s), g.dim()).matrix());
      },
      py::arg("kind"), py::arg("J"), "J -> h_J -> J, exact; entries returned as strings.");

  // Groups
  py::enum_<lattice::GroupKind>(m, "GroupKind")
      .value("Nilpotent", lattice::GroupKind::Nilpotent)
      .value("NonNilpotent", lattice::GroupKind::NonNilpotent);
  m.def("group_mul", [](lattice::GroupKind k, std::array<cd, 3> a, std::array<cd, 3> b) {
    const auto p = lattice::group_mul(k, {a[0], a[1], a[2]}, {b[0], b[1], b[2]});
    return std::array<cd, 3>{p.x, p.y, p.z};
  });
  m.def("group_inverse", [](lattice::GroupKind k, std::array<cd, 3> a) {
    const auto p = lattice::group_inverse(k, {a[0], a[1], a[2]});
    return std::array<cd, 3>{p.x, p.y, p.z};
  });

  // Lattices
  py::class_<Spec>(m, "LatticeSpec")
      .def_static("abelian", [] { return Spec{lattice::LatticeSpec(lattice::LatticeSpecAbelian{})}; })
      .def_static("iwasawa", [] { return Spec{lattice::LatticeSpec(lattice::iwasawa_spec())}; })
      .def_static("example2", [] { return Spec{lattice::LatticeSpec(lattice::example2_spec())}; })
      .def_static("example3", [] { return Spec{lattice::LatticeSpec(lattice::example3_spec())}; })
      .def_static(
          "nilpotent",
          [](const std::vector<std::vector<long long>>& a) { return Spec{lattice::LatticeSpec(lattice::nil_spec(to_int_matrix(a)))}; },
          py::arg("A"))
      .def_static(
          "non_nilpotent",
          [](const std::vector<std::vector<long long>>& a) {
            return Spec{lattice::LatticeSpec(lattice::example3_spec(to_int_matrix(a)))};
          },
          py::arg("A"), "Spec from a hyperbolic A in SL(2, Z), B = I, k_mu = 2.")
      .def_static(
          "non_nilpotent_4x4",
          [](const std::vector<std::vector<long long>>& a, long long k_mu) {
            return Spec{lattice::LatticeSpec(lattice::type3a_spec(to_int_matrix(a), k_mu))};
          },
          py::arg("A"), py::arg("k_mu") = 2, "Spec from a 4x4 A with four non-real eigenvalues, B = I.")
      .def("type", [](const Spec& s) {
        return std::visit(
            [](const auto& v) -> std::string {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, lattice::LatticeSpecAbelian>) return "abelian";
              else if constexpr (std::is_same_v<T, lattice::LatticeSpecNil>) return "nilpotent";
              else return "non-nilpotent";
            },
            s.v);
      });

  m.def("verify", [](const Spec& s, double tol) { return verify(s.v, tol); }, py::arg("spec"), py::arg("tol") = kDefaultTol);
  m.def(
      "classify", [](const Spec& s, double tol) { return lattice::to_string(lattice::classify(s.v, tol)); },
      py::arg("spec"), py::arg("tol") = kDefaultTol);
  m.def("lambda_generators", [](const Spec& s) { return lattice::lambda_generators(s.v); });

  // Holomorphic functions
  m.def(
      "h1", [](const Spec& s, double tol) { return h1_dict(winkelmann::h1(s.v, tol)); }, py::arg("spec"),
      py::arg("tol") = 1e-8);
  m.def(
      "dim_W", [](const Spec& s, double tol) { return winkelmann::dim_W(s.v, tol); }, py::arg("spec"),
      py::arg("tol") = 1e-8);
  m.def(
      "dim_W_shortcut", [](const Spec& s, double tol) { return winkelmann::dim_W_shortcut(s.v, tol); },
      py::arg("spec"), py::arg("tol") = 1e-8);
  m.def("h1_for_class", [](const std::string& c) { return h1_dict(winkelmann::h1_for_class(lattice::parse_classification(c))); });
  m.def("ad_on_quotient", &winkelmann::ad_on_quotient);

  // Invariant frames
  m.def(
      "bracket_matrix", [](const Eigen::Matrix2d& q, const Eigen::Matrix4d& p, double tol) {
        return frames::bracket_matrix(frame(q, p), tol);
      },
      py::arg("Q"), py::arg("P"), py::arg("tol") = 1e-8);
  m.def("s_operator", [](const Eigen::Matrix2d& q, const Eigen::Matrix4d& p) { return frames::s_operator(frame(q, p)); },
        py::arg("Q"), py::arg("P"));
  m.def(
      "frame_check",
      [](const Eigen::Matrix2d& q, const Eigen::Matrix4d& p, double tol) {
        const auto r = frames::lemma2_verify(frame(q, p), tol);
        py::dict d;
        d["q_symmetric"] = r.q_symmetric;
        d["trace_nonzero"] = r.trace_nonzero;
        d["eigenvalues_match"] = r.eigenvalues_match;
        d["A"] = Eigen::Matrix2cd(r.a);
        d["eigenvalues"] = std::vector<cd>{r.eigenvalues[0], r.eigenvalues[1]};
        d["residual"] = r.relation_residual;
        d["pass"] = r.pass();
        return d;
      },
      py::arg("Q"), py::arg("P"), py::arg("tol") = 1e-8,
      "Bracket matrix of the frame, its spectrum against +-tr(Q)/2, and the S P = P M residual.");
  m.def(
      "random_valid_frame",
      [](std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const auto fp = frames::random_valid_frame(rng);
        return py::make_tuple(Eigen::Matrix2d(fp.q), Eigen::Matrix4d(fp.p));
      },
      py::arg("seed"));

  // Pseudo-Kaehler forms
  m.def("omega_standard", [] { return to_eigen(pk::omega_standard().matrix()); });
  m.def("metric_signature", [] {
    const auto r = pk::metric_and_signature(pk::omega_standard(), cs::standard_structure(6));
    return py::make_tuple(r.positive, r.negative, r.zero);
  });
  m.def("pk_exists", [](const std::string& c) { return pk::pk_exists(lattice::parse_classification(c)); });
  m.def("invariance_factors", [](const Spec& s) { return pk::invariance_factors(s.v); });
  m.def("translation_pullback_factor", &pk::translation_pullback_factor);
}
