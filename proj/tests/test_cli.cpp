#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(KLC_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli tableau") {
  auto r = run("tableau --weight 1,4,9,0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "tableau: [[0,4,9],[1]]"));
  CHECK(contains(r.out, "a: 1"));
  r = run("tableau --perm 2,3,4,1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "tableau: [[1,3,4],[2]]"));
  r = run("tableau --weight 3,2,1");
  CHECK(contains(r.out, "tableau: [[1],[2],[3]]"));
}

TEST_CASE("cli gkdim") {
  auto r = run("gkdim --weight 1,4,9,0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "gkdim: 5"));
  r = run("gkdim --perm 5,4,3,2,1");
  CHECK(contains(r.out, "gkdim: 0"));
  r = run("gkdim --perm 5,4,2,1,3");
  CHECK(contains(r.out, "gkdim: 4"));
}

TEST_CASE("cli variety") {
  auto r = run("variety --weight 1,0,2,-1,-2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "label: Balpha(2)"));
  r = run("variety --perm 2,1,4,3");
  CHECK(contains(r.out, "label: nilradical(I=1,3)"));
  r = run("variety --perm 4,3,2,1");
  CHECK(contains(r.out, "label: tableau([[1],[2],[3],[4]])"));
}

TEST_CASE("cli cells") {
  auto r = run("cells --n 3 --side right --method kl");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cells: 4"));
  r = run("cells --n 4 --side right --method rs");
  CHECK(contains(r.out, "cells: 10"));
  r = run("cells --n 4 --side two-sided --method kl");
  CHECK(contains(r.out, "cells: 5"));
  r = run("cells --dihedral 6 --side left --method kl");
  CHECK(contains(r.out, "cells: 4"));
}

TEST_CASE("cli rs and kl methods agree") {
  for (int n = 3; n <= 5; ++n)
    for (const char* side : {"left", "right", "two-sided"}) {
      const std::string base = "cells --n " + std::to_string(n) + " --side " + side;
      const auto kl = run(base + " --method kl");
      const auto rs = run(base + " --method rs");
      CHECK(kl.exit_code == 0);
      // listings differ only in the method line
      std::string a = kl.out, b = rs.out;
      a.erase(a.find("method:"), 11);
      b.erase(b.find("method:"), 11);
      CHECK(a == b);
    }
}

TEST_CASE("cli klpoly") {
  auto r = run("klpoly --n 4 --x 1,3,2,4 --w 3,4,1,2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "P = 1+q"));
  CHECK(contains(r.out, "mu = 1"));
  r = run("klpoly --n 3 --x 3,2,1 --w 1,2,3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli verify") {
  auto r = run("verify engine --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "failures=0"));
  r = run("verify thm3 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "checked=128"));
  r = run("verify thm2 --n 5 --samples 500");
  CHECK(r.exit_code == 0);
  r = run("verify engine --n 9");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli output is deterministic") {
  const auto a = run("verify thm2 --n 4 --samples 200 --seed 7");
  const auto b = run("verify thm2 --n 4 --samples 200 --seed 7");
  // elapsed times differ; compare everything else
  auto strip = [](std::string s) {
    for (std::size_t at; (at = s.find(" elapsed=")) != std::string::npos;) {
      const std::size_t end = s.find('\n', at);
      s.erase(at, (end == std::string::npos ? s.size() : end) - at);
    }
    return s;
  };
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("cli json format") {
  auto r = run("--format json gkdim --weight 1,4,9,0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"gkdim\":5"));
  r = run("--format json variety --perm 5,4,2,1,3");
  CHECK(contains(r.out, "\"label\":\"Balpha(2)\""));
}

TEST_CASE("cli cache round trip") {
  const std::string path = "/tmp/klc_test_cache_s4.txt";
  auto r = run("cache build --n 4 --path " + path);
  CHECK(r.exit_code == 0);
  r = run("cache inspect --path " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "model: S4"));
  const auto cached = run("klpoly --n 4 --x 1,3,2,4 --w 3,4,1,2 --cache " + path);
  CHECK(cached.exit_code == 0);
  CHECK(contains(cached.out, "P = 1+q"));
  const auto cells_cached = run("cells --n 4 --side right --method kl --cache " + path);
  const auto cells_plain = run("cells --n 4 --side right --method kl");
  CHECK(cells_cached.out == cells_plain.out);
  std::remove(path.c_str());
}

TEST_CASE("cli error paths") {
  CHECK(run("tableau --weight 1,x,3").exit_code == 2);
  CHECK(run("tableau --weight 1,1/2,0").exit_code == 2);  // non-integral
  CHECK(run("tableau").exit_code == 2);
  CHECK(run("gkdim --weight 1,2 --perm 2,1").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}
