#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tropcon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TROPCON_DATA_DIR) + "/" + name; }

std::string temp_file(const char* name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("run") {
  const Result r = run({"run", data("one_step.tc")});
  CHECK(r.code == 0);
  CHECK(r.out == "q = [-2:3:0]\n");
  CHECK(run({"run", data("one_step.tc"), "--affine"}).out == "q = (-2, 3)\n");
  const Result c = run({"run", data("cycle.tc")});
  CHECK(c.out == "l1 = [0:-1:0]\nl2 = [0:-3:0]\np = [0:1:0]\n");
}

TEST_CASE("check") {
  const Result r = run({"check", data("cycle.tc")});
  CHECK(r.code == 2);
  CHECK(r.out.find("p: NOT admissible, cycle p,l1,a,l2,p") != std::string::npos);
  CHECK(run({"check", data("pappus.tc")}).code == 0);
}

TEST_CASE("lift-verify") {
  const Result ok = run({"lift-verify", data("pappus.tc"), "--seed", "5", "--trials", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("seed: 5") != std::string::npos);
  CHECK(ok.out.find("trial 1 (seed 6): commutes") != std::string::npos);
  CHECK(ok.out == run({"lift-verify", data("pappus.tc"), "--seed", "5", "--trials", "2"}).out);

  const Result refused = run({"lift-verify", data("cycle.tc")});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("not tropically admissible") != std::string::npos);

  const Result bypass = run({"lift-verify", data("cycle.tc"), "--bypass-admissibility"});
  CHECK(bypass.code == 2);
  CHECK(bypass.out.find("MISMATCH at p") != std::string::npos);
  CHECK(bypass.out.find("lifted [0:0:0]") != std::string::npos);
}

TEST_CASE("lift-verify reports degenerate lifts") {
  // Meeting a line with a copy of itself has no classical solution for any lift.
  const std::string path = temp_file("tropcon_degenerate.tc",
                                     "point a = [0:0:0]\npoint b = [1:2:0]\nline l = join a b\n"
                                     "line m = join a b\npoint q = meet l m\n");
  const Result r = run({"lift-verify", path, "--bypass-admissibility", "--max-resamples", "2"});
  CHECK(r.code == 3);
  CHECK(r.out.find("lift failed") != std::string::npos);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("pappus") {
  const Result r = run({"pappus", "--points", "0,0 4,1 1,5 6,2 2,7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c'' = [-4:-5:0]") != std::string::npos);
  CHECK(r.out.find("witness: [4:4:0]") != std::string::npos);
  const Result rnd = run({"pappus", "--random", "3", "--seed", "1"});
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("configuration 2") != std::string::npos);
  CHECK(run({"pappus", "--points", "0,0 1,1"}).code == 1);
  CHECK(run({"pappus"}).code == 1);
}

TEST_CASE("plot") {
  const auto out = (std::filesystem::temp_directory_path() / "tropcon_plot.svg").string();
  const Result r = run({"plot", data("pappus.tc"), "--out", out, "--bbox", "-10,-10,10,10"});
  CHECK(r.code == 0);
  std::ifstream in(out);
  std::stringstream svg;
  svg << in.rdbuf();
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(run({"plot", data("pappus.tc"), "--bbox", "1,2,3"}).code == 1);
  CHECK(run({"plot", data("pappus.tc")}).out.find("</svg>") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frob"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"run", "/nonexistent/file.tc"}).code == 1);
  const std::string bad = temp_file("tropcon_bad.tc", "point a = [0:0:0]\nline l = join a\n");
  const Result r = run({"run", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}
