#include "support/fixtures.hpp"

#include "invsub/errors.hpp"
#include "invsub/report.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace invsub;
using namespace fixtures;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell with stderr discarded.
Run run_cli(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = "INVSUB_COLOR=never " + std::string(INVSUB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string tmp;
  if (!stdin_text.empty()) {
    char name[] = "/tmp/invsub-test-XXXXXX";
    const int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    tmp = name;
    std::ofstream(tmp) << stdin_text;
    cmd += " < " + tmp;
  }
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  if (!tmp.empty()) std::remove(tmp.c_str());
  return r;
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", 0, 0);
}

Report scan_report(const std::string& name) {
  const auto ms = load_set(name);
  return make_report(ms, full_lattice_scan(ms).by_dimension);
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse the line format") {
  const auto p = load_problem("nilpotent4.txt");
  CHECK(p.n == 4);
  CHECK(p.matrices.size() == 3);
  REQUIRE(p.shift.has_value());
  CHECK(*p.shift == 1);
  CHECK(p.matrices[2](0, 1) == 1);

  const auto q = parse_problem("# comment\n1/2 -3\n0 4  # trailing\n\n\n1 0\n0 1\n");
  CHECK(q.n == 2);
  CHECK(q.matrices.size() == 2);
  CHECK(q.matrices[0](0, 0) == Rational(1, 2));
  CHECK_FALSE(q.shift.has_value());
}

TEST_CASE("line format errors carry positions") {
  auto e = parse_failure("1 2\n3 1/0\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_failure("1 2 3\n4 5\n7 8 9\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_failure("n 3\n1 2\n3 4\n");
  CHECK(e.line() == 2);

  e = parse_failure("1 2\n3 4\n5 6\n");
  CHECK(e.line() == 3);

  e = parse_failure("1 2\n3 x\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  CHECK(std::string(e.what()).find("'x'") != std::string::npos);

  e = parse_failure("1 0\n0 1\n\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(e.line() == 4);

  e = parse_failure("1 0\n0 1\nshift 2\n");
  CHECK(e.line() == 3);

  CHECK(parse_failure("").line() >= 1);
  CHECK(parse_failure("# nothing here\n\n").line() >= 1);
  CHECK(std::string(parse_failure("n 2\n").what()).find("no matrices") != std::string::npos);
}

TEST_CASE("structured layout matches the line layout") {
  const auto json = load_problem("example2.json");
  CHECK(json.n == 7);
  CHECK(json.matrices.size() == 2);
  REQUIRE(json.shift.has_value());
  const auto again = parse_problem(format_problem(json));
  CHECK(again.n == json.n);
  CHECK(again.matrices == json.matrices);
  CHECK(again.shift == json.shift);

  const auto q = parse_problem(R"({"matrices": [[[1, "2/4"], [0, -1]]]})");
  CHECK(q.n == 2);
  CHECK(q.matrices[0](0, 1) == Rational(1, 2));
}

TEST_CASE("structured layout errors") {
  auto e = parse_failure("{\n  \"matrices\": [[[1, 2],\n   [3]]]\n}");
  CHECK(e.line() == 2);
  CHECK(std::string(e.what()).find("entries") != std::string::npos);

  e = parse_failure("{\n  \"matrices\": [[[1, \"1/0\"], [0, 1]]]\n}");
  CHECK(e.line() == 2);

  e = parse_failure("{\n  \"matrices\": [\n    [[1, 2], [3, 4]\n}");
  CHECK(e.line() == 4);

  e = parse_failure("{\"matrices\": []}");
  CHECK(std::string(e.what()).find("no matrices") != std::string::npos);

  e = parse_failure("{\"n\": 3, \"matrices\": [[[1, 0], [0, 1]]]}");
  CHECK(std::string(e.what()).find("expected 3") != std::string::npos);

  e = parse_failure("{\"matrix\": []}");
  CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
}

TEST_CASE("format_problem round trip") {
  for (const char* name : {"nilpotent4.txt", "example1.txt", "example3.txt"}) {
    const auto p = load_problem(name);
    const auto q = parse_problem(format_problem(p));
    CHECK(q.n == p.n);
    CHECK(q.matrices == p.matrices);
    CHECK(q.shift == p.shift);
  }
}

TEST_CASE("machine format round trips golden reports") {
  for (const char* name : {"nilpotent4.txt", "example1.txt", "example2.json"}) {
    const auto report = scan_report(name);
    const auto text = render_machine(report);
    const auto back = parse_report(text);
    CHECK(back == report);
    CHECK(render_machine(back) == text);
  }
}

TEST_CASE("machine format round trips unsolved families and timings") {
  Report r;
  r.n = 3;
  r.matrix_count = 2;
  r.shift = Rational(-1, 2);
  r.complete = false;
  ReportFamily f;
  f.eigen = {Rational(3, 4), -2};
  f.parameters = 3;
  f.substitution = {std::nullopt, parse_param_poly("t1*t3 - 2", 3), std::nullopt};
  f.multivector = {parse_param_poly("t1", 3), parse_param_poly("1", 3), parse_param_poly("t2^2 + 1/3*t3", 3)};
  f.residual = {parse_param_poly("t1*t2 + t2*t3 + t1*t3 + 1", 3)};
  f.solved = false;
  r.sections.push_back({2, {f}});
  r.timings["search"] = 0.25;
  const auto back = parse_report(render_machine(r));
  CHECK(back == r);
  CHECK(render_text(r).find("unsolved") != std::string::npos);
  CHECK(render_text(r).find("0.25") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report("{"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"format": "other", "version": 1})"), ParseError);
  auto text = render_machine(scan_report("nilpotent4.txt"));
  text.replace(text.find("\"version\": 1"), 12, "\"version\": 9");
  CHECK_THROWS_AS(parse_report(text), ParseError);
}

TEST_CASE("text rendering") {
  const auto report = scan_report("nilpotent4.txt");
  const auto text = render_text(report);
  for (const char* title : {"Zero-dimensional", "One-dimensional", "Two-dimensional", "Three-dimensional", "Four-dimensional"})
    CHECK(count(text, title) == 1);
  CHECK(text.find("⟨e₁, e₂⟩") != std::string::npos);
  CHECK(text.find("{0}") != std::string::npos);
  CHECK(text == render_text(scan_report("nilpotent4.txt")));
  CHECK(render_text(report, true) != text);

  const auto ms = load_set("example3.txt");
  const auto one = render_text(make_report(ms, {{1, families_of_dimension(ms, 1)}}));
  CHECK(one.find("(3,3,3)") != std::string::npos);
  CHECK(one.find("⟨e₁+e₅⟩") != std::string::npos);
  CHECK(one.find("⟨e₉+α(e₁+e₅)⟩") != std::string::npos);
}

TEST_CASE("text names parameters with Greek letters") {
  std::vector<ParamPoly> v = {parse_param_poly("t2", 2), ParamPoly(2), parse_param_poly("-t1", 2), ParamPoly(2, 1)};
  CHECK(render_vector(v, {"α", "β"}) == "e₄+βe₁-αe₃");
}

TEST_CASE("cli: single dimension and formats") {
  const auto r = run_cli("--dim 2 " + data_path("nilpotent4.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.find("Two-dimensional subspaces") != std::string::npos);
  CHECK(r.out.find("(1,1,1)   ⟨e₁, e₂⟩") != std::string::npos);
  CHECK(count(r.out, "⟨") == 1);

  const auto m = run_cli("--format machine " + data_path("nilpotent4.txt"));
  CHECK(m.status == 0);
  CHECK(parse_report(m.out) == scan_report("nilpotent4.txt"));

  const auto stdin_run = run_cli("-", read_file(data_path("nilpotent4.txt")));
  CHECK(stdin_run.status == 0);
  CHECK(stdin_run.out == run_cli(data_path("nilpotent4.txt")).out);

  const auto again = run_cli("--from-report --format machine -", m.out);
  CHECK(again.status == 0);
  CHECK(again.out == m.out);
}

TEST_CASE("cli: output is deterministic") {
  const auto a = run_cli("--format machine " + data_path("example1.txt"));
  const auto b = run_cli("--format machine " + data_path("example1.txt"));
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run_cli(data_path("example2.json")).out == run_cli(data_path("example2.json")).out);
}

TEST_CASE("cli: shift override and identity input") {
  const auto s2 = run_cli("--shift 2 --format machine " + data_path("nilpotent4.txt"));
  CHECK(s2.status == 0);
  CHECK(parse_report(s2.out).shift == 2);
  const auto id = run_cli("--dim 1", "1 0 0\n0 1 0\n0 0 1\n");
  CHECK(id.status == 0);
  CHECK(count(id.out, "⟨") == 3);
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("--bogus").status == 2);
  CHECK(run_cli("--dim 1 --all " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("--format xml " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("--dim 5 " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("--dim -1 " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("--shift 0 " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("--shift 1/0 " + data_path("nilpotent4.txt")).status == 2);
  CHECK(run_cli("-", "1 2\n3 1/0\n").status == 3);
  CHECK(run_cli("-", "1 0\n0 1\n\n1 0 0\n0 1 0\n0 0 1\n").status == 3);
  CHECK(run_cli("-", "0 2\n1 0\n").status == 4);
  CHECK(run_cli("/nonexistent/problem.txt").status == 5);
  CHECK(run_cli("--from-report -", "{}").status == 3);
}
