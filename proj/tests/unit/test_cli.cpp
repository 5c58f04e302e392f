#include "commands.hpp"

#include "solvlie/errors.hpp"
#include "solvlie/lattice/examples.hpp"
#include "solvlie/lie/catalog.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace solvlie;
using namespace solvlie::cli;

namespace {

std::string data(const std::string& name) { return std::string(SOLVLIE_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Commands, Catalog) {
  const auto r = cmd_catalog({});
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.results["entries"].size(), 3u);
  EXPECT_EQ(r.inputs_digest.size(), 64u);
  const auto j = r.to_json();
  EXPECT_EQ(j["command"], "catalog");
  EXPECT_EQ(j["pass"], true);
}

TEST(Commands, LatticeOnBundledData) {
  const Options opt;
  const auto e2 = cmd_lattice(data("example2.json"), opt);
  EXPECT_TRUE(e2.pass);
  EXPECT_EQ(e2.results["classification"], "3a");
  EXPECT_EQ(e2.results["h1"]["h1"], 1);
  EXPECT_EQ(e2.results["pk_exists"], false);

  const auto e3 = cmd_lattice(data("example3.json"), opt);
  EXPECT_TRUE(e3.pass);
  EXPECT_EQ(e3.results["classification"], "3b");
  EXPECT_EQ(e3.results["h1"]["h1"], 3);
  EXPECT_EQ(e3.results["pk_exists"], true);

  const auto iw = cmd_lattice(data("iwasawa.json"), opt);
  EXPECT_TRUE(iw.pass);
  EXPECT_EQ(iw.results["classification"], "2");
  EXPECT_EQ(iw.results["h1"]["h1"], 2);
  EXPECT_EQ(iw.results["pk_exists"], false);

  const auto ab = cmd_lattice(data("abelian.json"), opt);
  EXPECT_TRUE(ab.pass);
  EXPECT_EQ(ab.results["h1"]["h1"], 3);
}

TEST(Commands, H1AndPseudoKaehler) {
  EXPECT_TRUE(cmd_h1(data("example3.json"), {}).pass);
  EXPECT_TRUE(cmd_h1(data("example2.json"), {}).pass);
  const auto p = cmd_pseudokahler(data("example3.json"), {});
  EXPECT_TRUE(p.pass);
  EXPECT_EQ(p.results["signature"], (json{4, 2}));
  EXPECT_EQ(p.results["form_invariant"], true);
  const auto q = cmd_pseudokahler(data("example2.json"), {});
  EXPECT_TRUE(q.pass);
  EXPECT_EQ(q.results["form_invariant"], false);
}

TEST(Commands, Integrable) {
  const auto ok = cmd_integrable("non-nilpotent", data("j0.json"), {});
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.results["roundtrip"], true);
  const auto bad = cmd_integrable("non-nilpotent", data("noninteg_j.json"), {});
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.results["equivalence_holds"], true);
  EXPECT_TRUE(bad.results.contains("witness"));
  EXPECT_THROW(cmd_integrable("semisimple", data("j0.json"), {}), ParseError);
}

TEST(Commands, RandomFramesAreDeterministic) {
  Options opt;
  opt.seed = 11;
  const auto a = cmd_lemma2(std::nullopt, 25, opt), b = cmd_lemma2(std::nullopt, 25, opt);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  opt.seed = 12;
  EXPECT_NE(cmd_lemma2(std::nullopt, 25, opt).inputs_digest, a.inputs_digest);
  EXPECT_THROW(cmd_lemma2(std::nullopt, 0, opt), ParseError);
  EXPECT_TRUE(cmd_lemma2(std::nullopt, std::nullopt, opt).pass);
}

TEST(Json, RoundTrips) {
  for (const lattice::LatticeSpec& s : {lattice::LatticeSpec(lattice::example2_spec()),
                                       lattice::LatticeSpec(lattice::example3_spec()),
                                       lattice::LatticeSpec(lattice::iwasawa_spec())}) {
    const json j = io::to_json(s);
    EXPECT_EQ(io::to_json(io::lattice_spec_from_json(j)), j);
  }
  const auto g = lie::non_nilpotent_real_form();
  EXPECT_EQ(io::algebra_from_json(io::to_json(g)), g);
  EXPECT_EQ(io::rational_from_json(io::to_json(Rational(-3, 7))), Rational(-3, 7));
  EXPECT_EQ(io::to_json(Rational(4)), json(4));
  frames::FramePair fp;
  fp.q(0, 1) = fp.q(1, 0) = 0.5;
  const auto back = io::frame_from_json(io::to_json(fp));
  EXPECT_EQ(back.q, fp.q);
  EXPECT_EQ(back.p, fp.p);
}

TEST(Json, ParseErrors) {
  EXPECT_THROW(io::rational_from_json(json("1/0")), ParseError);
  EXPECT_THROW(io::rational_from_json(json(true)), ParseError);
  EXPECT_THROW(io::qmatrix_from_json(json::parse("[[1, 2], [3]]")), ParseError);
  EXPECT_THROW(io::lattice_spec_from_json(json::parse(R"({"type": "simple"})")), ParseError);
  EXPECT_THROW(io::read_file(data("does_not_exist.json")), ParseError);
  EXPECT_THROW(io::structure_from_json(json::parse("[[1, 0], [0, 1]]")), DimensionError);
}

TEST(Export, MatchesBundledData) {
  const auto dir = std::filesystem::temp_directory_path() / "solvlie_export_test";
  std::filesystem::remove_all(dir);
  export_examples(dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(SOLVLIE_DATA_DIR)) {
    const auto name = entry.path().filename().string();
    ASSERT_TRUE(std::filesystem::exists(dir / name)) << name;
    EXPECT_EQ(io::read_file((dir / name).string()), io::read_file(entry.path().string())) << name;
  }
  std::filesystem::remove_all(dir);
}
