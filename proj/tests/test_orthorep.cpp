#include <doctest.h>

#include "ctxprob/error.hpp"
#include "ctxprob/orthorep.hpp"
#include "fixtures.hpp"

using namespace ctxprob;
using testsupport::load_logic;
using testsupport::load_rep;

namespace {

Eigen::VectorXcd vec2(double a, double b) {
  Eigen::VectorXcd v(2);
  v << std::complex<double>(a, 0), std::complex<double>(b, 0);
  return v;
}

}  // namespace

TEST_CASE("shipped representations check out at 1e-12") {
  for (const auto& [logic_file, rep_file] :
       {std::pair{"square.json", "square_rep.json"},
        std::pair{"firefly.json", "firefly_rep.json"}}) {
    const auto logic = load_logic(logic_file);
    const auto rep = load_rep(rep_file);
    const auto report = check_orthogonal_rep(logic, rep, 1e-12);
    CHECK(report.ok());
    CHECK(report.violations.empty());
  }
}

TEST_CASE("norm and orthogonality violations are reported") {
  const auto logic = load_logic("square.json");
  auto rep = load_rep("square_rep.json");

  SUBCASE("norm") {
    rep.vectors["a1"] *= 1.5;
    const auto report = check_orthogonal_rep(logic, rep, 1e-10);
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
      found = found || (v.kind == "unit-norm" && v.severity == Severity::error);
    CHECK(found);
  }
  SUBCASE("orthogonality and duplicate") {
    rep.vectors["b2"] = rep.vectors["b1"];
    const auto report = check_orthogonal_rep(logic, rep, 1e-10);
    CHECK_FALSE(report.ok());
    bool ortho = false, dup = false;
    for (const auto& v : report.violations) {
      ortho = ortho || v.kind == "orthogonality";
      dup = dup || v.kind == "duplicate-vector";
    }
    CHECK(ortho);
    CHECK(dup);
  }
}

TEST_CASE("missing vectors and dimension mismatches throw") {
  const auto logic = load_logic("square.json");
  auto rep = load_rep("square_rep.json");

  SUBCASE("missing") {
    rep.vectors.erase("b2");
    CHECK_THROWS_AS(check_orthogonal_rep(logic, rep, 1e-10), DomainError);
  }
  SUBCASE("dimension") {
    Eigen::VectorXcd v(3);
    v.setZero();
    v[0] = 1.0;
    rep.vectors["b2"] = v;
    CHECK_THROWS_AS(check_orthogonal_rep(logic, rep, 1e-10), DomainError);
  }
}

TEST_CASE("cross-context orthogonality is a faithfulness warning, not an error") {
  // b1 is orthogonal to a1 and b2 to a2, but neither pair shares a context: the
  // representation is valid yet fails to be faithful there.
  const auto logic = load_logic("square.json");
  OrthogonalRep rep;
  rep.dimension = 2;
  rep.vectors["a1"] = vec2(1, 0);
  rep.vectors["a2"] = vec2(0, 1);
  rep.vectors["b1"] = vec2(0, -1);
  rep.vectors["b2"] = vec2(-1, 0);

  const auto report = check_orthogonal_rep(logic, rep, 1e-10);
  CHECK(report.ok());
  int warnings = 0;
  for (const auto& v : report.violations) {
    CHECK(v.severity == Severity::warning);
    CHECK(v.kind == "faithfulness");
    ++warnings;
  }
  CHECK(warnings == 2);
}

TEST_CASE("representation JSON parsing is strict") {
  CHECK_THROWS_AS(parse_orthogonal_rep("[]"), ParseError);
  CHECK_THROWS_AS(parse_orthogonal_rep(R"({"vectors": {}})"), ParseError);
  CHECK_THROWS_AS(parse_orthogonal_rep(R"({"dimension": 0, "vectors": {}})"), ParseError);
  CHECK_THROWS_AS(parse_orthogonal_rep(R"({"dimension": 2, "vectors": {}, "x": 1})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_orthogonal_rep(R"({"dimension": 2, "vectors": {"a": [[1, 0], [0]]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_orthogonal_rep(R"({"dimension": 2, "vectors": {"a": [1, 0]}})"),
      ParseError);

  const auto rep = parse_orthogonal_rep(
      R"({"dimension": 2, "vectors": {"a": [[1, 0], [0, -1]]}})");
  CHECK(rep.dimension == 2);
  REQUIRE(rep.vectors.count("a") == 1);
  CHECK(rep.vectors.at("a")[1] == std::complex<double>(0, -1));
}
