#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Cli {
  int exit_code;
  std::string out;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "polypres_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Cli run(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = "cd " + work_dir().string() + " && " + POLYPRES_BIN_PATH +
                    " " + args + " >stdout.txt 2>stderr.txt";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("version and usage errors") {
  Cli v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("polypres 1.0.0 format 1") != std::string::npos);
  CHECK(run("").exit_code == 2);
  CHECK(run("plane").exit_code == 2);
  CHECK(run("--no-such-flag").exit_code == 2);
  CHECK(run("plane gen --q x").exit_code == 2);
}

TEST_CASE("plane generation, validation, dual and graph") {
  CHECK(run("plane gen --q 2").exit_code == 0);
  CHECK(fs::exists(work_dir() / "pg2_2.plane"));

  Cli check = run("plane check pg2_2.plane");
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("plane pg2_2: valid") != std::string::npos);

  CHECK(run("plane gen --q 6").exit_code == 2);
  CHECK(run("plane check no_such_file.plane").exit_code == 2);

  CHECK(run("plane dual pg2_2.plane").exit_code == 0);
  CHECK(run("plane check pg2_2_dual.plane").exit_code == 0);

  Cli graph = run("plane graph pg2_2.plane");
  CHECK(graph.exit_code == 0);
  CHECK(slurp(work_dir() / "pg2_2.graph").rfind("# bipartite parts: 7 7", 0) ==
        0);
}

TEST_CASE("invalid plane files are flagged") {
  std::ofstream f(work_dir() / "broken.plane");
  f << "plane broken order 2\n";
  f << "L0: p1 p3 p6\nL1: p2 p3 p6\nL2: p0 p5 p6\nL3: p2 p4 p5\n";
  f << "L4: p0 p1 p2\nL5: p1 p4 p5\nL6: p0 p3 p4\n";
  f.close();
  Cli check = run("plane check broken.plane");
  CHECK(check.exit_code == 1);
  CHECK(check.out.find("INVALID") != std::string::npos);
  CHECK(run("bijection search broken.plane").exit_code == 1);
}

TEST_CASE("trace construction per characteristic") {
  Cli two = run("bijection trace --q 2");
  CHECK(two.exit_code == 0);
  CHECK(two.out.find("P1 pass, P2 pass") != std::string::npos);
  CHECK(run("bijection verify pg2_2.plane pg2_2.bijection").exit_code == 0);

  CHECK(run("bijection trace --q 3").exit_code == 2);

  Cli five = run("bijection trace --q 5");
  CHECK(five.exit_code == 1);
  CHECK(five.out.find("certification FAILED") != std::string::npos);
  CHECK(fs::exists(work_dir() / "pg2_5.bijection"));
}

TEST_CASE("search via the command line") {
  CHECK(run("plane gen --q 3").exit_code == 0);
  CHECK(run("bijection search pg2_3.plane --jobs 2").exit_code == 0);
  CHECK(fs::exists(work_dir() / "pg2_3.bijection"));
  CHECK(run("bijection verify pg2_3.plane pg2_3.bijection").exit_code == 0);
  CHECK(run("bijection search pg2_3.plane --budget 3 -o over.bijection")
            .exit_code == 3);
}

TEST_CASE("full build pipelines") {
  Cli tri = run("build --plane pg2_2.plane --bijection pg2_2.bijection "
                "--triangle -o tri_out");
  CHECK(tri.exit_code == 0);
  CHECK(tri.out.find("curvature=euclidean") != std::string::npos);
  CHECK(fs::exists(work_dir() / "tri_out/triples.txt"));
  CHECK(fs::exists(work_dir() / "tri_out/presentation.txt"));
  std::string report = slurp(work_dir() / "tri_out/report.txt");
  CHECK(report.find("complex V=3 E=21 F=21 k=3 chi=3") != std::string::npos);

  Cli hyp = run("build --plane pg2_2.plane --bijection pg2_2.bijection "
                "--word abcbcab -o hyp_out");
  CHECK(hyp.exit_code == 0);
  CHECK(hyp.out.find("curvature=hyperbolic") != std::string::npos);

  CHECK(run("build --plane pg2_2.plane --bijection pg2_2.bijection "
            "--triangle --word abc -o both_out")
            .exit_code == 2);
  CHECK(run("build --plane pg2_2.plane --bijection pg2_2.bijection "
            "-o none_out")
            .exit_code == 2);
  CHECK(run("build --plane pg2_2.plane --bijection pg2_2.bijection "
            "--word abca -o bad_word_out")
            .exit_code == 2);
}

TEST_CASE("bijections from one plane do not load against another") {
  CHECK(run("plane gen --q 4").exit_code == 0);
  CHECK(run("bijection verify pg2_4.plane pg2_2.bijection").exit_code == 2);
}
