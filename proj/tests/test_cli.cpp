#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("TRIGROUP_CLI");
  REQUIRE_MESSAGE(p != nullptr, "TRIGROUP_CLI must point at the built binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("verify: passes, exit 0, reproducible output") {
  const RunResult a = run("verify gen_desargues --trials 20 --seed 42 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"passes\": 20") != std::string::npos);
  const RunResult b = run("verify gen_desargues --trials 20 --seed 42 --json");
  CHECK(a.out == b.out);
  const RunResult c = run("verify gen_desargues --trials 20 --seed 42 --json --jobs 4");
  CHECK(a.out == c.out);
}

TEST_CASE("verify: TG_SEED overrides --seed") {
  const RunResult direct = run("verify group_axioms --trials 10 --seed 7 --json");
  const RunResult via_env = run("verify group_axioms --trials 10 --seed 42 --json", "TG_SEED=7");
  CHECK(direct.exit_code == 0);
  CHECK(direct.out == via_env.out);
}

TEST_CASE("verify: fault injection flips the exit status") {
  const RunResult r = run("verify gen_desargues --trials 5 --seed 1 --fault-inject");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify not_a_theorem --trials 1").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("figure not_a_figure").exit_code == 2);
}

TEST_CASE("eval: pipeline and errors") {
  write_file("/tmp/trigroup_inputs.json",
             R"({"A": {"delta": ["1", "0", "0"]}, "B": {"delta": ["0", "1", "0"]}})");
  const RunResult sum = run("eval \"A + B\" --inputs /tmp/trigroup_inputs.json");
  CHECK(sum.exit_code == 0);
  CHECK(sum.out.find("\"geometric\"") != std::string::npos);
  const RunResult pre = run("eval \"A # B\" --inputs /tmp/trigroup_inputs.json");
  CHECK(pre.exit_code == 0);
  CHECK(pre.out.find("\"-1\"") != std::string::npos);
  const RunResult zero = run("eval \"A # -A\" --inputs /tmp/trigroup_inputs.json");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("\"pseudo\"") != std::string::npos);
  const RunResult half = run("eval \"half(A)\" --inputs /tmp/trigroup_inputs.json");
  CHECK(half.exit_code == 0);
  CHECK(half.out.find("\"-1/2\"") != std::string::npos);
  CHECK(run("eval \"A + B # A\" --inputs /tmp/trigroup_inputs.json").exit_code == 2);
  CHECK(run("eval \"Z\" --inputs /tmp/trigroup_inputs.json").exit_code == 2);
  write_file("/tmp/trigroup_bad.json", "{not json");
  CHECK(run("eval \"A\" --inputs /tmp/trigroup_bad.json").exit_code == 2);
}

TEST_CASE("eval: stdin inputs") {
  write_file("/tmp/trigroup_inputs2.json", R"({"A": {"delta": ["2", "1", "1"]}})");
  const RunResult r = run("eval \"A + A\" --inputs - < /tmp/trigroup_inputs2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"4\"") != std::string::npos);
}

TEST_CASE("figure: svg to file, deterministic bytes") {
  const RunResult a = run("figure fig1_desargues --out /tmp/trigroup_fig1a.svg");
  CHECK(a.exit_code == 0);
  const RunResult b = run("figure fig1_desargues --out /tmp/trigroup_fig1b.svg");
  CHECK(b.exit_code == 0);
  std::ifstream fa("/tmp/trigroup_fig1a.svg"), fb("/tmp/trigroup_fig1b.svg");
  const std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  const std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK(sa.find("<svg") != std::string::npos);
  CHECK(sa.find(">S<") != std::string::npos);
}

TEST_CASE("figure: scene overrides") {
  write_file("/tmp/trigroup_scene.json",
             R"({"model":"central","S":["0","0","1"],
                 "l":[["0","1","0"],["1","0","0"],["1","-1","0"]],
                 "A":[["1","0","1"],["0","1","1"],["2","2","1"]],
                 "B":[["3","0","1"],["0","3","1"],["4","4","1"]]})");
  const RunResult ok = run("figure fig1_desargues --scene /tmp/trigroup_scene.json "
                           "--out /tmp/trigroup_scene_fig.svg");
  CHECK(ok.exit_code == 0);
  // A pre-sum that leaves the space of drawable triangles is a failure, not
  // a silent fallback.
  write_file("/tmp/trigroup_scene_bad.json",
             R"({"x": {"delta": ["1","0","0"]}, "y": {"delta": ["-1","0","0"]}})");
  CHECK(run("figure fig4_axis_infinity --scene /tmp/trigroup_scene_bad.json").exit_code == 1);
  write_file("/tmp/trigroup_scene_invalid.json", R"({"model":"central","S":["0","0","0"]})");
  CHECK(run("figure fig1_desargues --scene /tmp/trigroup_scene_invalid.json").exit_code == 2);
}

TEST_CASE("show: element and scene summaries") {
  write_file("/tmp/trigroup_elem.json", R"({"kind": "geometric", "delta": ["1", "0", "0"]})");
  const RunResult e = run("show --in /tmp/trigroup_elem.json");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("geometric") != std::string::npos);
  const RunResult bad = run("show --in /tmp/trigroup_elem_missing.json");
  CHECK(bad.exit_code == 2);
}
