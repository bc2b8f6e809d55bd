#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"
#include "tiltwall/cli.hpp"

using namespace tiltwall;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

void check_envelope(const nlohmann::json& j) {
  REQUIRE(j.is_object());
  CHECK(j.at("class").is_string());
  REQUIRE(j.at("walls").is_array());
  for (const auto& w : j.at("walls")) {
    for (const char* k : {"s", "rho2", "sub", "alphasq"}) CHECK(w.at(k).is_string());
  }
  CHECK((j.at("bound").is_null() || j.at("bound").is_string()));
}

}  // namespace

TEST_CASE("wall") {
  Run a = run({"wall", "(2,0,-3,*)", "(1,-1,1/2,*)"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "semicircle s=-2 rho2=1\n");
  Run b = run({"wall", "(2,0,-3,*)", "(4,0,-6,*)"});
  CHECK(b.code == kExitDomain);
  CHECK(first_line(b.out) == "degenerate");
  Run q = run({"wall", "(2,0,-3,4)", "--q"});
  CHECK(q.code == kExitOk);
  CHECK(q.out == "semicircle s=-2 rho2=1\n");
  CHECK(run({"wall", "(2,0,-3,*)", "--q"}).code == kExitParse);
  CHECK(run({"wall", "(2,0,-1/3,*)", "(1,0,0,*)"}).code == kExitParse);
}

TEST_CASE("bound") {
  CHECK(run({"bound", "2", "-1", "-1/2"}).out == "5/6\n");
  Run c = run({"bound", "2", "0", "-4", "--certificate"});
  CHECK(c.code == kExitOk);
  CHECK(first_line(c.out) == "7");
  CHECK(c.out.find("(2,-1,-1/2,5/6) + (0,1,-7/2,37/6)") != std::string::npos);
  Run s = run({"bound", "2", "-1", "-7/2", "--searched"});
  CHECK(s.out.find("agree") != std::string::npos);
  Run none = run({"bound", "2", "0", "1"});
  CHECK(none.code == kExitDomain);
  CHECK(first_line(none.out) == "no semistable class");
  CHECK(run({"bound", "2", "-1", "0"}).code == kExitDomain);
  CHECK(run({"bound", "3", "0", "0"}).code == kExitParse);
  CHECK(run({"bound", "2", "x", "0"}).code == kExitParse);
  CHECK(run({"bound", "1", "-1", "-1/2"}).out == "11/6\n");
  CHECK(run({"bound", "0", "1", "-5/2"}).out == "19/6\n");
  CHECK(run({"bound", "-2", "0", "2"}).out == "2\n");
  // twisted input: (2,1,-1/2) = (2,-1,-1/2)(1)
  CHECK(run({"bound", "2", "1", "-1/2"}).out == "1/6\n");
}

TEST_CASE("scan") {
  Run a = run({"--tsv", "scan", "(2,0,-3,4)", "--beta", "-1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "sub\ts\trho2\talphasq\n(2,-1,-1/2)\t-5/2\t13/4\t1\n");
  Run e = run({"scan", "(2,0,-2,2)", "--beta", "-1"});
  CHECK(e.code == kExitOk);
  CHECK(count(e.out, "\n") == 1);
  CHECK(run({"scan", "(2,0,0,0)", "--beta", "0"}).code == kExitDomain);
  CHECK(run({"scan", "(2,0,0,0)", "--beta", "zero"}).code == kExitParse);
}

TEST_CASE("moduli, chi, lattice") {
  CHECK(run({"moduli", "0", "-3"}).out == "blow-up of Gr(3,10) along P3xP3, dim 21\n");
  CHECK(run({"moduli", "-1", "-1/2"}).out == "P3, dim 3\n");
  CHECK(run({"moduli", "0", "1"}).code == kExitDomain);
  CHECK(run({"chi", "(2,0,-1,0)"}).out == "0\n");
  CHECK(run({"chi", "(1,0,0,0)", "(1,2,2,4/3)"}).out == "10\n");
  CHECK(run({"lattice", "(2,-1,0,0)"}).out == "false\n");
  CHECK(run({"lattice", "(2,-1,-1/2,5/6)"}).out == "true\n");
  CHECK(run({"lattice", "(2,-1"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"nonsense"}).code == kExitParse);
}

TEST_CASE("json schema") {
  std::vector<std::vector<std::string>> cmds = {
      {"--json", "wall", "(2,0,-3,*)", "(1,-1,1/2,*)"},
      {"--json", "wall", "(2,0,-3,4)", "--q"},
      {"--json", "bound", "2", "0", "-4", "--certificate"},
      {"--json", "bound", "2", "-1", "-3/2", "--searched"},
      {"--json", "scan", "(2,0,-3,4)", "--beta", "-1"},
      {"--json", "scan", "(2,0,-2,2)", "--beta", "-1"},
      {"--json", "moduli", "0", "-5"},
      {"--json", "chi", "(2,0,-1,0)"},
      {"--json", "lattice", "(2,-1,0,0)"},
  };
  for (const auto& c : cmds) {
    Run r = run(c);
    CAPTURE(c[1]);
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    auto j = nlohmann::json::parse(r.out);
    check_envelope(j);
    // rationals in the envelope are canonical
    std::string cls = j.at("class").get<std::string>();
    if (count(cls, ",") == 3) CHECK(parse_class(cls).str() == cls);
    for (const auto& w : j.at("walls")) {
      std::string s = w.at("s").get<std::string>();
      CHECK(Rat::parse(s).str() == s);
    }
  }
  auto scan = nlohmann::json::parse(run(cmds[4]).out);
  REQUIRE(scan["walls"].size() == 1);
  CHECK(scan["walls"][0]["sub"] == "(2,-1,-1/2)");
  CHECK(scan["walls"][0]["rho2"] == "13/4");
  CHECK(scan["walls"][0]["alphasq"] == "1");
  CHECK(scan["bound"] == "4");
  auto b = nlohmann::json::parse(run(cmds[2]).out);
  CHECK(b["bound"] == "7");
  CHECK(b["class"] == "(2,0,-4,7)");
  CHECK(run({"--json", "--tsv", "chi", "(1,0,0,0)"}).code == kExitParse);
}

TEST_CASE("property: printed classes re-parse") {
  for (int i = 0; i < 200; ++i) {
    ChernCharacter v = testing_support::lattice_class();
    Run r = run({"--json", "chi", v.str()});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(parse_class(j["class"].get<std::string>()) == v);
    CHECK(Rat::parse(j["value"].get<std::string>()) == euler_char(v));
  }
}

TEST_CASE("plot") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tiltwalls_plot_test";
  fs::create_directories(dir);
  auto plot = [&](const std::string& v, const std::string& name) {
    fs::path p = dir / name;
    Run r = run({"plot", v, "-o", p.string()});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::string a = plot("(2,0,-3,4)", "a.svg");
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(count(a, "class=\"candidate-wall\"") == 2);
  CHECK(count(a, "class=\"q-wall\"") == 1);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
  CHECK(a.find("<title>tilt walls (2,0,-3,4)</title>") != std::string::npos);
  std::smatch m;
  std::regex poly("class=\"nu-zero\"[^>]* points=\"([^\"]*)\"");
  REQUIRE(std::regex_search(a, m, poly));
  CHECK(count(m[1].str(), ",") >= 64);

  std::string z = plot("(2,0,0,0)", "z.svg");
  CHECK(count(z, "class=\"candidate-wall\"") == 0);
  CHECK(count(z, "class=\"vertical-wall\"") == 1);

  std::string f = plot("(2,-1,-1/2,5/6)", "f.svg");
  CHECK(count(f, "class=\"candidate-wall\"") == 1);
  CHECK(f.find("s=-3/2 rho2=1/4") != std::string::npos);

  CHECK(run({"plot", "(2,0,-3,4)", "-o", "/nonexistent/dir/x.svg"}).code == kExitParse);
  CHECK(run({"plot", "(2,0,-3,4)", "--beta-min", "1", "--beta-max", "0"}).code == kExitParse);
  fs::remove_all(dir);
}

TEST_CASE("binary exit codes") {
  const char* bin = std::getenv("TILTWALLS_BIN");
  if (!bin) return;
  auto status = [&](const std::string& args) {
    std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    int s = std::system(cmd.c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status("wall '(2,0,-3,*)' '(1,-1,1/2,*)'") == 0);
  CHECK(status("bound 2 0 1") == 2);
  CHECK(status("lattice '(2,-1'") == 1);
  CHECK(status("scan '(2,0,0,0)' --beta 0") == 2);
}
