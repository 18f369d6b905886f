#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "obb/cli/commands.hpp"
#include "obb/cli/corpus.hpp"
#include "obb/cli/problem.hpp"

using namespace obb;
using namespace obb::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("obb_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* const kEx1 =
    "vars: x, y, z\nordering: deglex\ngens:\nx^3*z^2, x^3*y^4, y^5*z^2, x^2*y^5*z\n";
const char* const kEx3 =
    "vars: x,y,z\ngrading: 1 1 1\ngens: x^3*z^2+x^2*y^2*z, x^3*y^8, y^10*z^2\n";

}  // namespace

TEST_CASE("parsing the ex3 problem") {
  const Problem p = parse_problem(kEx3);
  CHECK(p.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(p.generators.size() == 3);
  CHECK(p.ordering == OrderingSpec(BaseOrder::kDegRevLex));
  CHECK(p.warnings.empty());
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("vars: x\ngens:\nx^-1\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(error_at("vars: x\ngens:\nx + q\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(error_at("vars: x, x\n").first == 1);
  CHECK(error_at("vars: x, y\ngrading: 1 1 1\n").first == 2);
  CHECK(error_at("vars: x\nrank: 2\nshifts: 0\n").first == 3);
  CHECK(error_at("vars: x\nrank: 2\ngens:\nx\n").first == 4);
  CHECK(error_at("vars: x\ngens:\n[x, x^2]\n").first == 3);
  CHECK(error_at("vars: x\ngens:\nx 3\n").first == 3);
  CHECK(error_at("vars: x\ngens:\n1/0*x\n").first == 3);
  CHECK(error_at("gens:\nx\n").first != 0);
  CHECK(error_at("vars: x\nfoo: 1\n").first == 2);
}

TEST_CASE("empty generator lists and comments") {
  const Problem p = parse_problem("# nothing here\nvars: a, b # two variables\ngens:\n\n");
  CHECK(p.generators.empty());
  const std::string f = write_temp("empty.obb", "vars: a\ngens:\n");
  const Run r = run({"gb", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("# 0 elements") != std::string::npos);
}

TEST_CASE("coefficients and vectors") {
  const Problem p = parse_problem(
      "vars: x, y\nrank: 2\nshifts: 0 1\ngens:\n[-3/6*x^2 + 2*x*y, 4*y],\n[0,\n x]\n");
  REQUIRE(p.generators.size() == 2);
  CHECK(format_vector(p.generators[0], p.vars, p.ordering) == "[-1/2*x^2 + 2*x*y, 4*y]");
  CHECK(format_vector(p.generators[1], p.vars, p.ordering) == "[0, x]");
  const Problem q = parse_problem("vars: x\ngens:\n2*3*x*x - 1/2\n");
  CHECK(format_vector(q.generators[0], q.vars, q.ordering) == "6*x^2 - 1/2");
}

TEST_CASE("render and parse round trip") {
  CHECK(parse_problem(render_problem(parse_problem(kEx3))) == parse_problem(kEx3));
  const Problem multi = parse_problem(
      "vars: x, y, z\ngrading: 1 1 1\ngrading: 0 1 2\nrank: 2\nshifts: 0,0 1,-1\n"
      "ordering: lex:pot\ngens:\n[x*y, z], [x^2*y, -7/3*x*z]\n");
  CHECK(parse_problem(render_problem(multi)) == multi);
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    const Problem a = random_ideal(rng);
    CHECK(parse_problem(render_problem(a)) == a);
    const Problem b = random_monomials(rng, {8, 4, 6, 3});
    CHECK(parse_problem(render_problem(b)) == b);
  }
}

TEST_CASE("homogenization") {
  const Problem p = homogenize(parse_problem("vars: x, y\ngens:\nx^2 + y\n"));
  CHECK(p.vars.back() == "h");
  CHECK(format_vector(p.generators[0], p.vars, p.ordering) == "x^2 + y*h");

  const Problem same = homogenize(parse_problem("vars: x, h\ngens:\nx*h + h^2\n"));
  CHECK(same.vars.back() == "h0");
  CHECK(format_vector(same.generators[0], same.vars, same.ordering) == "x*h + h^2");

  const Problem c7 = homogenize(gen_cyclic(7));
  CHECK(c7.vars.size() == 8);
  CHECK(c7.generators.size() == 7);
  for (const auto& g : c7.generators) CHECK(is_homogeneous(g));
  // h is the smallest variable.
  const Term h = Term::variable(8, 7);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(c7.ordering.compare({Term::variable(8, k), 0}, {h, 0}) > 0);
  }

  CHECK_THROWS_AS(homogenize(parse_problem("vars: x, y\ngrading: 1 2\ngens:\nx\n")),
                  MathDomainError);
}

TEST_CASE("cyclic systems") {
  const Problem c2 = gen_cyclic(2);
  CHECK(format_vector(c2.generators[0], c2.vars, c2.ordering) == "x1 + x2");
  CHECK(format_vector(c2.generators[1], c2.vars, c2.ordering) == "x1*x2 - 1");
  const Problem c3 = gen_cyclic(3);
  CHECK(c3.generators[1] == parse_vector("x1*x2 + x2*x3 + x3*x1", c3));
  CHECK(c3.generators[2] == parse_vector("x1*x2*x3 - 1", c3));
  CHECK_THROWS_AS(gen_cyclic(1), InvalidArgument);
}

TEST_CASE("minpairs on ex1") {
  const std::string f = write_temp("ex1.obb", kEx1);
  const Run r = run({"minpairs", f, "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["Sigma"] == 6);
  CHECK(j["Sigma2"] == 4);
  CHECK(j["Theta"] == 3);
}

TEST_CASE("stats on ex3, table and json agree") {
  const std::string f = write_temp("ex3.obb", kEx3);
  const Run t = run({"stats", f, "--ordering", "deglex"});
  const Run j = run({"stats", f, "--ordering", "deglex", "--json"});
  REQUIRE(t.code == 0);
  REQUIRE(j.code == 0);
  const auto row = nlohmann::json::parse(j.out)["runs"][0];
  CHECK(row["treated"] == 3);
  CHECK(row["M23"].get<int>() + row["M48"].get<int>() == 1);
  std::istringstream lines(t.out);
  std::string header;
  std::string values;
  std::getline(lines, header);
  std::getline(lines, values);
  std::istringstream cells(values);
  std::vector<std::string> v;
  for (std::string c; cells >> c;) v.push_back(c);
  REQUIRE(v.size() == 11);
  CHECK(v[0] == "ckr");
  const char* keys[] = {"G", "Sigma", "Sigma2", "B", "M23", "M48", "Gain", "Theta", "treated"};
  for (std::size_t k = 0; k < 9; ++k) CHECK(v[k + 1] == row[keys[k]].dump());
}

TEST_CASE("compare reports Gain = M23 + M48 - B") {
  const std::string f = write_temp("c5.obb", render_problem(homogenize(gen_cyclic(5))));
  const Run r = run({"compare", f, "--json"});
  REQUIRE(r.code == 0);
  const auto runs = nlohmann::json::parse(r.out)["runs"];
  REQUIRE(runs.size() == 2);
  CHECK(runs[0]["strategy"] == "gm");
  CHECK(runs[1]["strategy"] == "ckr");
  for (const auto& row : runs) {
    CHECK(row["Gain"].get<long>() ==
          row["M23"].get<long>() + row["M48"].get<long>() - row["B"].get<long>());
    CHECK(row["G"] == 38);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"gb", "/nonexistent/file.obb"}).code == 1);
  CHECK(run({"gb", write_temp("bad.obb", "vars: x\ngens:\nx^-1\n")}).code == 2);
  CHECK(run({"gb", write_temp("inhom.obb", "vars: x, y\ngens:\nx + y^2\n")}).code == 3);
  const Run neg = run({"gb", write_temp("neg.obb", "vars: x, y\ngrading: 1 -1\ngens:\nx\n")});
  CHECK(neg.code == 3);
  CHECK(neg.err.find("warning") != std::string::npos);
  const std::string c6 = write_temp("c6.obb", render_problem(homogenize(gen_cyclic(6))));
  CHECK(run({"gb", c6, "--time-limit", "0.001"}).code == 4);
  CHECK(run({"gb", write_temp("ok.obb", kEx3), "--truncate", "1,2"}).code == 1);
  CHECK(run({"gb", write_temp("ok2.obb", kEx3), "--strategy", "fast"}).code == 1);
}

TEST_CASE("gb command prints the basis") {
  const std::string f = write_temp("ex3b.obb", kEx3);
  const Run r = run({"gb", f, "--ordering", "deglex", "--reduced"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("x^2*y^10*z") != std::string::npos);
  const Run t = run({"gb", f, "--ordering", "deglex", "--truncate", "12", "--json"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["basis"].size() == 3);
}

TEST_CASE("gen subcommands") {
  const Run c = run({"gen", "cyclic", "4", "--homogenize"});
  REQUIRE(c.code == 0);
  CHECK(parse_problem(c.out).vars.size() == 5);
  const Run a = run({"gen", "random", "--seed", "7"});
  const Run b = run({"gen", "random", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(run({"gen", "random", "--kind", "monomial"}).code == 0);
}
