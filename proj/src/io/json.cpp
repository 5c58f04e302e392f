#include "solvlie/io/json.hpp"

#include "solvlie/errors.hpp"

#include <fstream>

namespace solvlie::io {

namespace {

using cd = std::complex<double>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class F>
auto rows_of(const json& j, F&& entry) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("expected a non-empty array of rows");
  const std::size_t cols = j[0].size();
  using T = decltype(entry(j[0][0]));
  Matrix<T> m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c]);
  }
  return m;
}

Eigen::MatrixXd dmatrix_from_json(const json& j) {
  const auto m = rows_of(j, [](const json& e) {
    if (!e.is_number()) throw ParseError("expected a number");
    return e.get<double>();
  });
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

template <std::size_t N>
std::array<cd, N> complex_array(const json& j) {
  if (!j.is_array() || j.size() != N) throw ParseError("expected " + std::to_string(N) + " complex entries");
  std::array<cd, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = complex_from_json(j[k]);
  return out;
}

template <std::size_t N>
json complex_array(const std::array<cd, N>& a) {
  json out = json::array();
  for (const auto& z : a) out.push_back(to_json(z));
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string");
}

json to_json(const Rational& r) {
  if (denominator(r) == 1 && abs(numerator(r)) < BigInt(1LL << 53)) return numerator(r).convert_to<long long>();
  return to_string(r);
}

cd complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(cd z) { return json::array({z.real(), z.imag()}); }

QMatrix qmatrix_from_json(const json& j) { return rows_of(j, rational_from_json); }

IntMatrix intmatrix_from_json(const json& j) {
  return rows_of(j, [](const json& e) {
    if (!e.is_number_integer()) throw ParseError("expected an integer matrix entry");
    return BigInt(e.get<long long>());
  });
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

json dmatrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

json cmatrix_to_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

lie::StructureAlgebra algebra_from_json(const json& j) {
  const json& dim_field = field(j, "dim");
  if (!dim_field.is_number_unsigned()) throw ParseError("'dim' must be a non-negative integer");
  const auto dim = dim_field.get<std::size_t>();
  std::vector<lie::BracketEntry> brackets;
  for (const auto& b : field(j, "brackets")) {
    if (!b.is_array() || b.size() != 3 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned() ||
        !b[2].is_array())
      throw ParseError("bracket entries must be [i, j, [values...]]");
    QVector value;
    for (const auto& v : b[2]) value.push_back(rational_from_json(v));
    brackets.push_back({b[0].get<std::size_t>(), b[1].get<std::size_t>(), std::move(value)});
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return lie::StructureAlgebra(dim, brackets, labels);
}

json to_json(const lie::StructureAlgebra& g) {
  json brackets = json::array();
  for (const auto& b : g.nonzero_brackets()) {
    json value = json::array();
    for (const auto& v : b.value) value.push_back(to_json(v));
    brackets.push_back(json::array({b.i, b.j, value}));
  }
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", brackets}};
}

cs::AlmostComplexStructure structure_from_json(const json& j) {
  return cs::AlmostComplexStructure(qmatrix_from_json(j.is_object() ? field(j, "J") : j));
}

lattice::LatticeSpec lattice_spec_from_json(const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("'type' must be a string");
  const auto t = type.get<std::string>();
  if (t == "abelian") {
    lattice::LatticeSpecAbelian s;
    if (j.contains("generators"))
      for (const auto& g : j.at("generators")) s.generators.push_back(complex_array<3>(g));
    return s;
  }
  if (t == "nilpotent") {
    lattice::LatticeSpecNil s;
    s.a = intmatrix_from_json(field(j, "A"));
    s.lambda = complex_from_json(field(j, "lambda"));
    s.alpha = complex_array<2>(field(j, "alpha"));
    s.beta = complex_array<2>(field(j, "beta"));
    return s;
  }
  if (t == "non-nilpotent") {
    lattice::LatticeSpecSolv s;
    s.a = intmatrix_from_json(field(j, "A"));
    s.b = intmatrix_from_json(field(j, "B"));
    s.gamma = complex_from_json(field(j, "gamma"));
    s.delta = complex_from_json(field(j, "delta"));
    s.alpha = complex_array<4>(field(j, "alpha"));
    s.beta = complex_array<4>(field(j, "beta"));
    if (j.contains("k_mu") && !j.at("k_mu").is_null()) {
      if (!j.at("k_mu").is_number_integer()) throw ParseError("'k_mu' must be an integer");
      s.k_mu = j.at("k_mu").get<long long>();
    }
    return s;
  }
  throw ParseError("unknown lattice type '" + t + "'");
}

json to_json(const lattice::LatticeSpec& spec) {
  if (const auto* a = std::get_if<lattice::LatticeSpecAbelian>(&spec)) {
    json gens = json::array();
    for (const auto& g : a->generators) gens.push_back(complex_array(g));
    return {{"type", "abelian"}, {"generators", gens}};
  }
  if (const auto* n = std::get_if<lattice::LatticeSpecNil>(&spec))
    return {{"type", "nilpotent"},
            {"A", to_json(n->a)},
            {"lambda", to_json(n->lambda)},
            {"alpha", complex_array(n->alpha)},
            {"beta", complex_array(n->beta)}};
  const auto& s = std::get<lattice::LatticeSpecSolv>(spec);
  json out = {{"type", "non-nilpotent"},
              {"A", to_json(s.a)},
              {"B", to_json(s.b)},
              {"gamma", to_json(s.gamma)},
              {"delta", to_json(s.delta)},
              {"alpha", complex_array(s.alpha)},
              {"beta", complex_array(s.beta)}};
  if (s.k_mu) out["k_mu"] = *s.k_mu;
  return out;
}

frames::FramePair frame_from_json(const json& j) {
  const Eigen::MatrixXd q = dmatrix_from_json(field(j, "Q"));
  const Eigen::MatrixXd p = dmatrix_from_json(field(j, "P"));
  if (q.rows() != 2 || q.cols() != 2 || p.rows() != 4 || p.cols() != 4)
    throw ParseError("frame needs Q 2x2 and P 4x4");
  return {q, p};
}

json to_json(const frames::FramePair& fp) {
  return {{"Q", dmatrix_to_json(Eigen::MatrixXd(fp.q))}, {"P", dmatrix_to_json(Eigen::MatrixXd(fp.p))}};
}

json to_json(const lattice::CheckList& c) {
  json out = json::object();
  for (const auto& [name, ok] : c.items()) out[name] = ok;
  return out;
}

json to_json(const winkelmann::H1Report& r) {
  return {{"dim_h1_lie", r.dim_h1_lie}, {"dim_W", r.dim_W}, {"h1", r.h1}, {"kind", lattice::to_string(r.kind)}};
}

json to_json(const frames::Lemma2Report& r) {
  json ev = json::array();
  for (Eigen::Index k = 0; k < r.eigenvalues.size(); ++k) ev.push_back(to_json(r.eigenvalues[k]));
  return {{"q_symmetric", r.q_symmetric},
          {"trace_nonzero", r.trace_nonzero},
          {"eigenvalues_match", r.eigenvalues_match},
          {"A", cmatrix_to_json(Eigen::MatrixXcd(r.a))},
          {"eigenvalues", ev},
          {"conjugator", r.conjugator ? dmatrix_to_json(Eigen::MatrixXd(*r.conjugator)) : json(nullptr)},
          {"relation_residual", r.relation_residual},
          {"relation_ok", r.relation_ok},
          {"pass", r.pass()}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace solvlie::io
