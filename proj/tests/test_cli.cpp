#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("versal_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path out = dir / ("out" + std::to_string(counter));
  fs::path err = dir / ("err" + std::to_string(counter++));
  std::string cmd = env + " \"" VERSAL_CLI "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                    err.string() + "\"";
  int raw = std::system(cmd.c_str());
  Outcome o;
  o.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  o.out = slurp(out);
  o.err = slurp(err);
  return o;
}

const std::string ex1 = "\"" VERSAL_DATA_DIR "/example1.vdef\"";
const std::string ex2 = "\"" VERSAL_DATA_DIR "/example2.vdef\"";

}  // namespace

TEST_CASE("dimension commands") {
  auto t1 = cli("t1 " + ex1);
  CHECK(t1.code == 0);
  CHECK(t1.out.rfind("dim T1 = 4\n", 0) == 0);
  auto t2 = cli("t2 " + ex1);
  CHECK(t2.out.rfind("dim T2 = 3\n", 0) == 0);
  auto n = cli("normal " + ex2 + " --degree 0,0,0");
  CHECK(n.code == 0);
  CHECK(n.out.rfind("dim normal_(0,0,0) = 18\n", 0) == 0);
  auto h = cli("hilbert " + ex1 + " --upto 3");
  CHECK(h.out == "H(0) = 1\nH(1) = 5\nH(2) = 9\nH(3) = 13\n");
  auto gb = cli("gb " + ex1);
  CHECK(gb.out.rfind("GB (6 elements):", 0) == 0);
}

TEST_CASE("deform logs on stderr") {
  auto d = cli("deform " + ex1 + " --verbose 2");
  CHECK(d.code == 0);
  CHECK(d.err ==
        "Calculating first order deformations and obstruction space\n"
        "Calculating first order relations\nStarting lifting\nOrder 2\nOrder 3\n"
        "Solution is polynomial\n");
  CHECK(d.out.find("status: polynomial") != std::string::npos);
  CHECK(d.out.find("Order") == std::string::npos);
  auto quiet = cli("deform " + ex1);
  CHECK(quiet.err.empty());
  CHECK(quiet.out == d.out);
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate " + ex1).code == 2);
  CHECK(cli("deform " + ex1 + " --smart-lift").code == 2);
  CHECK(cli("normal " + ex1).code == 2);
  CHECK(cli("normal " + ex2 + " --degree 0,x,0").code == 2);
  CHECK(cli("deform " + ex1 + " --max-order 0").code == 2);
  CHECK(cli("deform " + ex1, "VERSAL_MAX_ORDER=0").code == 2);
  auto missing = cli("t1 /nonexistent/file.vdef");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(cli("t1 " + ex2).code == 1);  // local mode needs a Z-grading
  CHECK(cli("--help").code == 0);
}

TEST_CASE("parse errors carry a position") {
  fs::path bad = fs::temp_directory_path() / ("versal_bad_" + std::to_string(::getpid()) + ".vdef");
  std::ofstream(bad) << "ring: QQ\nvars: x y\ngenerators:\n  x*y +\n";
  auto o = cli("t1 \"" + bad.string() + "\"");
  CHECK(o.code == 1);
  CHECK(o.err.find("line 4") != std::string::npos);
  fs::remove(bad);
}

TEST_CASE("max order and output file") {
  auto t = cli("deform " + ex2 + " --degree 0,0,0 --max-order 2 --verbose 1");
  CHECK(t.code == 0);
  CHECK(t.out.find("status: truncated") != std::string::npos);
  CHECK(t.err == "Stopped at order 2 without a polynomial solution\n");
  auto env = cli("deform " + ex2 + " --degree 0,0,0", "VERSAL_MAX_ORDER=2");
  CHECK(env.out == t.out);

  fs::path target = fs::temp_directory_path() / ("versal_out_" + std::to_string(::getpid()));
  auto o = cli("t1 " + ex1 + " --output \"" + target.string() + "\"");
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(slurp(target).rfind("dim T1 = 4", 0) == 0);
  fs::remove(target);
}

TEST_CASE("repeated runs are byte-identical") {
  auto a = cli("deform " + ex2 + " --degree 0,0,0");
  auto b = cli("deform " + ex2 + " --degree 0,0,0");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto ja = nlohmann::json::parse(cli("deform " + ex1 + " --json").out);
  auto jb = nlohmann::json::parse(cli("deform " + ex1 + " --json").out);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja == jb);
  CHECK(ja["command"] == "deform");
}
