#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "seplogic/families.hpp"
#include "seplogic/io.hpp"
#include "seplogic/parser.hpp"

using namespace seplogic;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string output;
};

Run run(const std::string& args) {
  const std::string command = std::string("'") + SEPLOGIC_CLI + "' " + args + " 2>&1";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("seplogic_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
    save_graph(path("c5.graph"), cycle_graph(5));
    save_graph(path("c6.graph"), cycle_graph(6));
    save_graph(path("c8.graph"), cycle_graph(8));
    save_graph(path("c9.graph"), cycle_graph(9));
    save_graph(path("c20.graph"), cycle_graph(20));
    const Graph triangles = cycle_graph(3).disjoint_union(cycle_graph(3));
    save_graph(path("two_triangles.graph"), triangles);
    std::ofstream(path("conn.formula")) << "# connectivity\nforall x. forall y. conn(x, y |)\n";
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const Workspace& workspace() {
  static const Workspace w;
  return w;
}

std::string file(const std::string& name) { return "'" + workspace().path(name) + "'"; }

}  // namespace

TEST_CASE("check") {
  Run r = run("check " + file("c5.graph") + " 'forall x. forall y. conn(x,y|)'");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "result: true"));

  r = run("check " + file("two_triangles.graph") + " lib:fvs:1");
  CHECK(r.status == 1);
  CHECK(contains(r.output, "result: false"));

  r = run("check " + file("two_triangles.graph") + " " + file("conn.formula"));
  CHECK(r.status == 1);

  r = run("check " + file("c5.graph") + " 'conn(x,y|)'");
  CHECK(r.status == 2);
  CHECK(contains(r.output, "unbound variables: x, y"));

  r = run("check " + file("c5.graph") + " 'conn(x,y|z)' --bind x=0 --bind y=2 --bind z=1");
  CHECK(r.status == 0);

  r = run("check " + file("c5.graph") + " 'exists x. E(x, x) &'");
  CHECK(r.status == 2);
  CHECK(contains(r.output, "column 20"));

  r = run("check " + file("c5.graph") + " lib:nothing");
  CHECK(r.status == 2);

  r = run("check " + file("missing.graph") + " lib:connectivity");
  CHECK(r.status == 2);
}

TEST_CASE("check budget refusal") {
  Run r = run("check " + file("c20.graph") + " lib:k-connectivity:5");
  CHECK(r.status == 3);
  CHECK(contains(r.output, "--force"));
  r = run("check " + file("c5.graph") + " lib:k-connectivity:2");
  CHECK(r.status == 1);
}

TEST_CASE("game") {
  Run r = run("game " + file("c8.graph") + " " + file("c9.graph") + " --variant dp:1 -q 3");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "winner: Duplicator"));

  r = run("game " + file("c6.graph") + " " + file("two_triangles.graph") + " --variant conn:0 -q 2 --strategy");
  CHECK(r.status == 1);
  CHECK(contains(r.output, "winner: Spoiler"));
  CHECK(contains(r.output, "strategy for Spoiler"));

  r = run("game " + file("c6.graph") + " " + file("c6.graph") + " -q 2 --samples 20 --seed 5");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "samples: 20 disagreements: 0"));

  r = run("game " + file("c20.graph") + " " + file("c20.graph") + " -q 10");
  CHECK(r.status == 3);
  CHECK(contains(r.output, "estimated cost"));

  r = run("game " + file("c6.graph") + " " + file("c6.graph") + " --variant dp:0");
  CHECK(r.status == 2);

  r = run("game " + file("c6.graph") + " " + file("c6.graph") + " --pin 0:9");
  CHECK(r.status == 2);

  r = run("game " + file("c6.graph") + " " + file("c6.graph") + " --pin 0:1 -q 1");
  CHECK(r.status == 0);
}

TEST_CASE("lib") {
  Run r = run("lib connectivity");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "forall x. forall y. conn(x, y |)\n"));
  CHECK(contains(r.output, "# fragment: FO+conn(0), quantifier rank 2"));

  r = run("lib fvs 2");
  CHECK(r.status == 0);
  const std::string first_line = r.output.substr(0, r.output.find('\n'));
  CHECK_NOTHROW(parse(first_line));

  r = run("lib planarity");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "# fragment: FO+DP("));

  r = run("lib unknown-builder");
  CHECK(r.status == 2);
  CHECK(contains(r.output, "available builders"));
}

TEST_CASE("gen") {
  const std::string stem = workspace().path("ladders");
  Run r = run("gen planarity-pair --q 1 -o '" + stem + "'");
  CHECK(r.status == 0);
  CHECK(load_graph(stem + ".a.graph").order() == 8);
  CHECK(load_graph(stem + ".b.graph").order() == 8);

  const std::string cycles = workspace().path("cycles.graph");
  r = run("gen bipartite-pair --q 3 -o '" + cycles + "'");
  CHECK(r.status == 0);
  CHECK(load_graph(workspace().path("cycles.a.graph")) == cycle_graph(8));
  CHECK(load_graph(workspace().path("cycles.b.graph")) == cycle_graph(9));

  const std::string dp = workspace().path("dp");
  r = run("gen dp-pair --q 2 --k 1 -o '" + dp + "'");
  CHECK(r.status == 0);
  CHECK(load_graph(dp + ".a.graph").order() == 18);

  r = run("gen no-such-family -o '" + dp + "'");
  CHECK(r.status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("check").status == 2);
  CHECK(run("--help").status == 0);
}
