#include "doctest.h"

#include "torsionlab/cli.hpp"
#include "torsionlab/io.hpp"

#include <cstdlib>
#include <sstream>

using namespace torsionlab;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TORSIONLAB_TEST_DATA) + "/" + name; }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("equations") {
  const auto r = run({"equations", "--algebra", "heisenberg3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 9);
  CHECK(r.out.find("13|2: (xi_2_3)^2\n") != std::string::npos);

  const auto j = run({"equations", "--algebra", "sl2-H", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out).size() == 9);

  const auto tex = run({"equations", "--format", "latex"});
  CHECK(tex.out.find("\\xi^{2}_{3}") != std::string::npos);

  const auto p = run({"equations", "--pattern", data("pattern_heis.json")});
  CHECK(p.code == 0);
  CHECK(lines(p.out) == 1);

  CHECK(run({"equations", "--algebra", "file:" + data("heisenberg_file.json")}).out ==
        run({"equations", "--algebra", "heisenberg3"}).out);
}

TEST_CASE("algebra files failing Jacobi") {
  const auto r = run({"equations", "--algebra", "file:" + data("non_jacobi.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("Jacobi") != std::string::npos);
  CHECK(run({"equations", "--algebra", "file:" + data("non_jacobi.json"), "--no-jacobi"}).code == 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--algebra", "sl2-Y", "--matrix", data("jstar_4.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "zero torsion: true; integrable: false\n");

  // J_*(4) read in the H basis is not zero-torsion
  const auto h = run({"verify", "--algebra", "sl2-H", "--matrix", data("jstar_4.json"), "--format", "json"});
  CHECK(h.code == 1);
  const Json j = Json::parse(h.out);
  CHECK(j.at("zero_torsion") == false);
  CHECK_FALSE(j.at("nonzero_components").empty());

  const auto c = run({"verify", "--algebra", "nxn", "--matrix", data("nxn_ttilde.json")});
  CHECK(c.out == "zero torsion: true; integrable: true\n");
}

TEST_CASE("classify") {
  const auto n = run({"classify", "--algebra", "heisenberg3", "--matrix", data("n_D_3.json"), "--format", "json"});
  CHECK(n.code == 0);
  const Json j = Json::parse(n.out);
  CHECK(j.at("family") == "D");
  CHECK(j.at("params") == Json::parse(R"(["3"])"));
  CHECK(j.at("certified") == true);

  const auto t = Json::parse(run({"classify", "--algebra", "nxn", "--matrix", data("nxn_ttilde.json"), "--format", "json"}).out);
  CHECK(t.at("family") == "Ttilde");
  CHECK(t.at("params") == Json::parse(R"(["2", "3"])"));
  CHECK(t.at("certified") == true);

  const auto s = Json::parse(run({"classify", "--algebra", "nxn", "--matrix", data("nxn_stilde.json"), "--format", "json"}).out);
  CHECK(s.at("family") == "Stilde");
  CHECK(s.at("params") == Json::parse(R"(["1", "2"])"));

  const auto p = run({"classify", "--algebra", "sl2xsl2", "--matrix", data("sl2xsl2_jtilde.json"), "--format", "json"});
  CHECK(p.code == 0);
  const Json pj = Json::parse(p.out);
  CHECK(pj.at("params") == Json::parse(R"(["1", "2"])"));
  CHECK(pj.at("certified") == false);
  CHECK(pj.at("conjugator").is_null());

  const auto y = run({"classify", "--algebra", "sl2-Y", "--matrix", data("jstar_4.json")});
  CHECK(y.out.find("family: Jstar_sl2\nparams: 4\ncertified: true") != std::string::npos);
}

TEST_CASE("classification of a map with nonzero torsion is a mathematical failure") {
  CHECK(run({"classify", "--algebra", "sl2-H", "--matrix", data("jstar_4.json")}).code == 1);
}

TEST_CASE("equivalent") {
  const auto a = run({"equivalent", "--matrix1", data("n_S_2.json"), "--matrix2", data("n_D_3.json")});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("non-equivalent: ", 0) == 0);
  const auto b = run({"equivalent", "--matrix1", data("n_S_2.json"), "--matrix2", data("n_S_2.json"), "--format", "json"});
  CHECK(b.code == 0);
  CHECK(Json::parse(b.out).at("equivalent") == true);
  CHECK(run({"equivalent", "--matrix1", data("n_S_2.json")}).code == 2);
}

TEST_CASE("orbit") {
  const auto r = run({"orbit", "--vector", "0,1,-1", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("aut_class") == "two-sheet");
  CHECK(j.at("q") == "-1");
  CHECK(run({"orbit", "--vector", "1,2"}).code == 2);
  CHECK(run({"orbit", "--vector", "1,x,2"}).code == 2);
  const auto irr = run({"orbit", "--vector", "0,1,-2"});
  CHECK(irr.code == 0);
  CHECK(irr.out.find("irrational") != std::string::npos);
}

TEST_CASE("cr-verdict") {
  const auto s = run({"cr-verdict", "--matrix", data("n_S_2.json")});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("extends: rank 1", 0) == 0);
  const auto d = run({"cr-verdict", "--matrix", data("n_D_3.json"), "--format", "json"});
  const Json j = Json::parse(d.out);
  CHECK(j.at("extends") == false);
  CHECK(j.at("obstruction") == "KernelTooSmall");
}

TEST_CASE("reproduce-paper is byte-stable for a seed") {
  const auto a = run({"reproduce-paper", "--seed", "13", "--format", "json"});
  const auto b = run({"reproduce-paper", "--seed", "13", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  setenv("TORSIONLAB_SEED", "13", 1);
  CHECK(run({"reproduce-paper", "--format", "json"}).out == a.out);
  setenv("TORSIONLAB_SEED", "thirteen", 1);
  CHECK(run({"reproduce-paper"}).code == 2);
  unsetenv("TORSIONLAB_SEED");
}

TEST_CASE("input errors exit with 2 and usage") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"equations", "--bogus"}, {"equations", "--format", "yaml"},
        {"verify", "--matrix", "/nonexistent.json"}, {"verify"}, {"verify", "--algebra", "so3", "--matrix", data("n_S_2.json")},
        {"verify", "--algebra", "nxn", "--matrix", data("n_S_2.json")}, {"reproduce-paper", "--seed", "-x"}}) {
    const auto r = run(args);
    INFO(r.err);
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("reproduce-paper") != std::string::npos);
}
