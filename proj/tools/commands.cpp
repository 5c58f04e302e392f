#include "commands.hpp"

#include "solvlie/complex/structures.hpp"
#include "solvlie/errors.hpp"
#include "solvlie/frames/frames.hpp"
#include "solvlie/lattice/examples.hpp"
#include "solvlie/lie/catalog.hpp"
#include "solvlie/pk/pseudokahler.hpp"
#include "solvlie/winkelmann/h1.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <random>

namespace solvlie::cli {

namespace {

using cd = std::complex<double>;

std::string digest_of(const std::string& command, const json& inputs) {
  return sha256_hex(command + '\n' + inputs.dump());
}

RunReport make_report(const std::string& command, const json& inputs, json results, bool pass) {
  return {command, digest_of(command, inputs), std::move(results), pass};
}

json notes_json(const std::vector<std::string>& notes) { return notes; }

// Verification part of the lattice pipeline: {valid, details}.
std::pair<bool, json> verify(const lattice::LatticeSpec& spec, double tol) {
  if (const auto* a = std::get_if<lattice::LatticeSpecAbelian>(&spec)) {
    const auto r = lattice::verify_lattice_abelian(*a, tol);
    return {r.valid(), {{"checks", io::to_json(r.checks)}}};
  }
  if (const auto* n = std::get_if<lattice::LatticeSpecNil>(&spec)) {
    const auto r = lattice::verify_lattice_nil(*n, tol);
    return {r.valid(), {{"path", r.path}, {"checks", io::to_json(r.checks)}, {"notes", notes_json(r.notes)}}};
  }
  const auto r = lattice::verify_lattice_solv(std::get<lattice::LatticeSpecSolv>(spec), tol);
  return {r.valid(),
          {{"checks", io::to_json(r.checks)},
           {"lambda", io::to_json(r.lambda)},
           {"mu", io::to_json(r.mu)},
           {"generator_determinant", r.generator_determinant},
           {"notes", notes_json(r.notes)}}};
}

json factors_json(const std::vector<cd>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(io::to_json(f));
  return out;
}

lie::StructureAlgebra load_algebra(const std::string& algebra) {
  if (std::filesystem::exists(algebra)) return io::algebra_from_json(io::read_file(algebra));
  return lie::catalog_entry(lie::parse_algebra_kind(algebra)).real_form;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace

json RunReport::to_json() const {
  return {{"command", command}, {"inputs_digest", inputs_digest}, {"results", results}, {"pass", pass}};
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 0xf];
  }
  return out;
}

RunReport cmd_catalog(const Options&) {
  json entries = json::array();
  bool pass = true;
  for (const auto& e : lie::catalog()) {
    const bool jacobi = lie::jacobi_check(e.complex_algebra) && lie::jacobi_check(e.real_form);
    const bool unimodular = lie::is_unimodular(e.complex_algebra) && lie::is_unimodular(e.real_form);
    const auto series = lie::derived_and_central_series(e.complex_algebra);
    pass = pass && jacobi && unimodular && lie::nilradical_consistent(e);
    entries.push_back({{"kind", lie::to_string(e.kind)},
                       {"algebra", io::to_json(e.complex_algebra)},
                       {"real_form", io::to_json(e.real_form)},
                       {"nilradical", e.nilradical_indices},
                       {"jacobi", jacobi},
                       {"unimodular", unimodular},
                       {"nilpotent", series.nilpotent()},
                       {"derived_series", series.derived},
                       {"lower_central_series", series.lower_central}});
  }
  return make_report("catalog", json::object(), {{"entries", entries}}, pass);
}

RunReport cmd_integrable(const std::string& algebra, const std::string& j_path, const Options&) {
  const auto g = load_algebra(algebra);
  const json j_json = io::read_file(j_path);
  const auto j = io::structure_from_json(j_json);
  const json inputs = {{"algebra", io::to_json(g)}, {"J", io::to_json(j.matrix())}};

  const bool integrable = cs::is_integrable(g, j);
  const auto h = cs::h_from_j(g, j);
  const bool subalgebra = cs::is_subalgebra(lie::ComplexifiedAlgebra(g), h);
  json results = {{"integrable", integrable}, {"h_is_subalgebra", subalgebra}, {"equivalence_holds", integrable == subalgebra}};
  if (const auto w = cs::nijenhuis_witness(g, j)) {
    const auto n = cs::nijenhuis(g, j, g.basis_vector(w->first), g.basis_vector(w->second));
    json value = json::array();
    for (const auto& x : n) value.push_back(io::to_json(x));
    results["witness"] = {{"pair", {w->first, w->second}}, {"N_J", value}};
  }
  bool roundtrip = false;
  if (integrable) {
    roundtrip = cs::j_from_subspace(h, g.dim()) == j;
    results["roundtrip"] = roundtrip;
  }
  return make_report("integrable", inputs, results, integrable && subalgebra && roundtrip);
}

RunReport cmd_lattice(const std::string& spec_path, const Options& opt) {
  const auto spec = io::lattice_spec_from_json(io::read_file(spec_path));
  const json inputs = {{"spec", io::to_json(spec)}, {"tol", opt.tol}};
  auto [valid, details] = verify(spec, opt.tol);
  json results = {{"valid", valid}, {"verification", details}};
  if (valid) {
    const auto c = lattice::classify(spec, opt.tol);
    const auto h = winkelmann::h1(spec, opt.tol);
    results["classification"] = lattice::to_string(c);
    results["h1"] = io::to_json(h);
    results["dim_W_shortcut"] = winkelmann::dim_W_shortcut(spec, opt.tol);
    results["pk_exists"] = pk::pk_exists(c);
  }
  return make_report("lattice", inputs, results, valid);
}

RunReport cmd_h1(const std::string& spec_path, const Options& opt) {
  const auto spec = io::lattice_spec_from_json(io::read_file(spec_path));
  const json inputs = {{"spec", io::to_json(spec)}, {"tol", opt.tol}};
  try {
    const auto h = winkelmann::h1(spec, opt.tol);
    const bool consistent = h.h1 == winkelmann::h1_for_class(h.kind).h1 &&
                            h.dim_W == winkelmann::dim_W_shortcut(spec, opt.tol);
    json results = io::to_json(h);
    results["matches_class_table"] = consistent;
    return make_report("h1", inputs, results, consistent);
  } catch (const ClassificationError& e) {
    return make_report("h1", inputs, {{"error", e.what()}}, false);
  }
}

RunReport cmd_pseudokahler(const std::string& spec_path, const Options& opt) {
  const auto spec = io::lattice_spec_from_json(io::read_file(spec_path));
  const json inputs = {{"spec", io::to_json(spec)}, {"tol", opt.tol}};
  lattice::Classification c;
  try {
    c = lattice::classify(spec, opt.tol);
  } catch (const ClassificationError& e) {
    return make_report("pseudokahler", inputs, {{"error", e.what()}}, false);
  }
  const auto omega = pk::omega_standard();
  const auto j0 = cs::standard_structure(6);
  const auto metric = pk::metric_and_signature(omega, j0);
  const auto factors = pk::invariance_factors(spec);
  json results = {{"classification", lattice::to_string(c)},
                  {"pk_exists", pk::pk_exists(c)},
                  {"compatible", pk::compatibility_check(omega, j0)},
                  {"signature", {metric.positive, metric.negative}}};
  bool consistent = results["compatible"].get<bool>() && metric.nondegenerate();
  if (!std::holds_alternative<lattice::LatticeSpecSolv>(spec)) {
    // The standard form lives on the non-nilpotent group; other kinds use the table only.
    results["invariance_factors"] = nullptr;
  } else {
    bool all_one = true;
    for (const auto& f : factors) all_one = all_one && std::abs(f - cd(1.0)) < 1e-10;
    results["invariance_factors"] = factors_json(factors);
    results["form_invariant"] = all_one;
    consistent = consistent && all_one == pk::pk_exists(c);
  }
  results["consistent"] = consistent;
  return make_report("pseudokahler", inputs, results, consistent);
}

RunReport cmd_lemma2(const std::optional<std::string>& frame_path, std::optional<int> random, const Options& opt) {
  std::vector<frames::FramePair> samples;
  json inputs;
  if (random) {
    if (*random <= 0) throw ParseError("--random needs a positive count");
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < *random; ++k) samples.push_back(frames::random_valid_frame(rng));
    inputs = {{"random", *random}, {"seed", opt.seed}, {"tol", opt.tol}};
  } else {
    samples.push_back(frame_path ? io::frame_from_json(io::read_file(*frame_path)) : frames::FramePair{});
    inputs = {{"frame", io::to_json(samples.front())}, {"tol", opt.tol}};
  }
  json reports = json::array();
  int passed = 0;
  for (const auto& fp : samples) {
    json entry = {{"frame", io::to_json(fp)}};
    try {
      const auto r = frames::lemma2_verify(fp, std::max(opt.tol, 1e-8));
      entry["report"] = io::to_json(r);
      passed += r.pass();
    } catch (const NotSubalgebraError& e) {
      entry["error"] = e.what();
    }
    reports.push_back(entry);
  }
  json results = {{"samples", samples.size()}, {"passed", passed}, {"reports", reports}};
  return make_report("lemma2", inputs, results, passed == static_cast<int>(samples.size()));
}

void export_examples(const std::string& dir) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  write_json(root / "iwasawa.json", io::to_json(lattice::LatticeSpec(lattice::iwasawa_spec())));
  write_json(root / "example2.json", io::to_json(lattice::LatticeSpec(lattice::example2_spec())));
  write_json(root / "example3.json", io::to_json(lattice::LatticeSpec(lattice::example3_spec())));
  write_json(root / "abelian.json", io::to_json(lattice::LatticeSpec(lattice::LatticeSpecAbelian{})));
  write_json(root / "non_nilpotent.json", io::to_json(lie::non_nilpotent_real_form()));
  write_json(root / "j0.json", {{"J", io::to_json(cs::standard_structure(6).matrix())}});
  // First seeded conjugate of J0 that fails integrability on the non-nilpotent real form.
  const auto g = lie::non_nilpotent_real_form();
  std::mt19937_64 rng(1);
  for (;;) {
    const auto j = cs::random_structure(rng, 6);
    if (!cs::is_integrable(g, j)) {
      write_json(root / "noninteg_j.json", {{"J", io::to_json(j.matrix())}});
      break;
    }
  }
}

}  // namespace solvlie::cli
