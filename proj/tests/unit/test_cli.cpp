#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

namespace {

struct Run {
  int exit = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" MFNPS_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("energy command") {
  const auto r = run("energy --lambda 1 --state 0 --order 15 --scheme chain:1 --format csv");
  CHECK(r.exit == 0);
  CHECK(contains(r.out, ",0.8037706537705593,Converged,"));

  const auto trivial = run("energy --lambda 0 --state 2 --order 5 --scheme var1 --format csv");
  CHECK(trivial.exit == 0);
  CHECK(contains(trivial.out, ",2.5,Converged,"));
}

TEST_CASE("non-convergence exits with 2") {
  const auto r = run("energy --lambda 1 --state 8 --order 15 --scheme chain:1 --ground-params");
  CHECK(r.exit == 2);
  CHECK(contains(r.out, "NC"));
}

TEST_CASE("invalid input exits with 3") {
  CHECK(run("table --id 4").exit == 3);
  CHECK(run("energy --lambda -1").exit == 3);
  CHECK(run("energy --lambda 1 --scheme chain:0").exit == 3);
  CHECK(run("energy --lambda 1 --scheme bogus").exit == 3);
  CHECK(run("energy --lambda 1 --format xml").exit == 3);
  CHECK(run("energy").exit == 3);
  CHECK(run("frobnicate").exit == 3);
}

TEST_CASE("table command") {
  const auto t1 = run("table --id 1 --format csv");
  CHECK(t1.exit == 0);
  int lines = 0;
  for (char c : t1.out) lines += c == '\n';
  CHECK(lines == 17);
  CHECK(contains(t1.out, "2,0.8041081319413648\n"));

  const auto t3 = run("table --id 3 --format csv");
  CHECK(t3.exit == 0);
  CHECK(contains(t3.out, "row_key,lambda=0.01,lambda=10,lambda=100\n13,0.50725620"));

  const auto t5 = run("table --id 5 --format csv");
  CHECK(contains(t5.out, "\n8,NC,NC,"));
}

TEST_CASE("format from the environment") {
  const auto r = run("energy --lambda 1", "MFNPS_FORMAT=json");
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "\"value\": 0.8037706537705593"));
  const auto flag = run("energy --lambda 1 --format csv", "MFNPS_FORMAT=json");
  CHECK(contains(flag.out, "scheme,lambda,n,K,value"));
}

TEST_CASE("oracle and compare commands") {
  const auto o = run("oracle --lambda 0 --state 2 --format csv");
  CHECK(o.exit == 0);
  CHECK(contains(o.out, "\n2,2.5,"));

  const auto c = run("compare --lambda 0 --state 0 --scheme chain:1 --format json");
  CHECK(c.exit == 0);
  CHECK(contains(c.out, "\"abs_diff\": 0.0"));

  const auto nc = run("compare --lambda 1 --state 8 --ground-params --format csv");
  CHECK(nc.exit == 2);
}
