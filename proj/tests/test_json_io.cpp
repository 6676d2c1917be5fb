#include <doctest.h>

#include "ctxprob/classical.hpp"
#include "ctxprob/error.hpp"
#include "ctxprob/json_io.hpp"
#include "ctxprob/stochastic.hpp"
#include "ctxprob/urn.hpp"
#include "fixtures.hpp"

using namespace ctxprob;
using nlohmann::ordered_json;
using testsupport::load_logic;
using testsupport::uniform_measure;

TEST_CASE("read_text_file reports the failing path") {
  CHECK_THROWS_WITH_AS(read_text_file("/nonexistent/nope.json"),
                       "cannot open file '/nonexistent/nope.json'", Error);
}

TEST_CASE("parse_measure") {
  const auto m = parse_measure(R"({"weights": ["1/4", "1/4", "1/2"]})");
  CHECK(m.weights == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});

  CHECK(parse_measure(R"({"weights": [1, 0]})").weights[0] == 1);

  CHECK_THROWS_AS(parse_measure(R"({"weights": [0.5, 0.5]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"weights": ["1/2"], "total": 1})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"w": ["1"]})"), ParseError);
  CHECK_THROWS_AS(parse_measure(R"({"weights": ["1/2", "1/3"]})"), DomainError);
  CHECK_THROWS_AS(parse_measure(R"({"weights": ["1/2", "-1/2", "1"]})"), DomainError);
}

TEST_CASE("parse_matrix: bare arrays") {
  SUBCASE("integers and fraction strings stay exact") {
    const auto p = parse_matrix(R"([["1/2", "1/2"], [1, 0]])");
    REQUIRE(p.exact);
    CHECK(p.rational.entries[0][0].p == Rational(1, 2));
    CHECK(p.rational.entries[1][0].p == 1);
    CHECK(p.rational.row_atoms == std::vector<std::string>{"", ""});
  }
  SUBCASE("any float flips the whole matrix to real") {
    const auto p = parse_matrix(R"([["1/2", 0.5], [1, 0]])");
    REQUIRE_FALSE(p.exact);
    CHECK(p.real(0, 0) == 0.5);
    CHECK(p.real(0, 1) == 0.5);
    CHECK(p.real(1, 0) == 1.0);
  }
  SUBCASE("0/0 rows parse as Undefined") {
    const auto p = parse_matrix(R"([["1", "0"], ["0/0", "0/0"]])");
    REQUIRE(p.exact);
    CHECK(p.rational.row_defined(0));
    CHECK_FALSE(p.rational.row_defined(1));
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(parse_matrix(R"([[0.5, 0.5], ["0/0", "0/0"]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"([["1/2", "0/0"]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"([["1", "0"], ["1"]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"([])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"([[]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"([[true]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"("just a string")"), ParseError);
  }
}

TEST_CASE("parse_matrix: object form and round trip through matrix_to_json") {
  const auto logic = load_logic("firefly.json");
  const auto labeling = canonical_partition_labels(enumerate_two_valued_states(logic));
  const auto m = classical_cond_prob_matrix(logic, labeling, testsupport::point_measure(5, 0),
                                            "C2", "C1");
  const auto dumped = matrix_to_json(m).dump(2);

  const auto p = parse_matrix(dumped);
  REQUIRE(p.exact);
  CHECK(p.rational.row_context_name == "C2");
  CHECK(p.rational.col_context_name == "C1");
  CHECK(p.rational.row_atoms == m.row_atoms);
  CHECK(p.rational.col_atoms == m.col_atoms);
  REQUIRE(p.rational.rows() == m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      CHECK(p.rational.entries[i][j].defined == m.entries[i][j].defined);
      if (m.entries[i][j].defined) CHECK(p.rational.entries[i][j].p == m.entries[i][j].p);
    }

  CHECK_THROWS_AS(parse_matrix(R"({"entries": [[1]], "shape": [1, 1]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": "R"})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"entries": [[1, 0]], "col_atoms": ["only-one"]})"),
                  ParseError);
}

TEST_CASE("states and labels JSON shapes") {
  const auto logic = load_logic("square.json");
  const auto family = enumerate_two_valued_states(logic);
  const auto sj = states_to_json(family);
  REQUIRE(sj.at("states").size() == 4);
  CHECK(sj["states"][0] == ordered_json({{"a1", 1}, {"a2", 0}, {"b1", 1}, {"b2", 0}}));
  CHECK(sj["states"][3] == ordered_json({{"a1", 0}, {"a2", 1}, {"b1", 0}, {"b2", 1}}));

  const auto labeling = canonical_partition_labels(family);
  const auto lj = labels_to_json(logic, labeling);
  CHECK(lj["labels"]["a1"] == ordered_json::array({1, 2}));
  CHECK(lj["labels"]["b2"] == ordered_json::array({2, 4}));

  CHECK(states_to_table(family).find("atom") == 0);
  CHECK(labels_to_table(logic, labeling).find("{1,2}") != std::string::npos);
}

TEST_CASE("validation and separation JSON") {
  const auto logic =
      Logic::from_contexts({{"K1", {"a", "b", "c"}}, {"K2", {"a", "b", "d"}}});
  const auto vj = validation_to_json(validate_logic(logic));
  CHECK(vj["valid"] == false);
  REQUIRE(vj["violations"].size() == 1);
  CHECK(vj["violations"][0]["severity"] == "error");
  CHECK(vj["violations"][0]["kind"] == "overlap");

  SeparationReport rep;
  rep.separating = false;
  rep.non_separated = {{"a", "b"}};
  const auto sj = separation_to_json(rep);
  CHECK(sj["separating"] == false);
  CHECK(sj["non_separated"][0] == ordered_json::array({"a", "b"}));
}

TEST_CASE("matrix serialization uses 0/0 for Undefined") {
  const auto m = testsupport::make_exact_matrix({{"1", "0"}, {"0/0", "0/0"}});
  const auto j = matrix_to_json(m);
  CHECK(j["entries"][0] == ordered_json::array({"1", "0"}));
  CHECK(j["entries"][1] == ordered_json::array({"0/0", "0/0"}));
  CHECK(matrix_to_table(m).find("0/0") != std::string::npos);

  const auto v = classify_stochastic(m);
  const auto vj = verdict_to_json(v);
  CHECK(vj["partial"] == true);
  CHECK(vj["row_sums"] == ordered_json::array({"1", "0/0"}));
  CHECK(vj["col_sums"] == ordered_json::array({"0/0", "0/0"}));
}

TEST_CASE("decomposition JSON key depends on the kind") {
  const auto perm = birkhoff_decompose(
      RationalMatrix{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  const auto pj = decomposition_to_json(perm);
  CHECK(pj["kind"] == "permutation");
  CHECK(pj["terms"][0].contains("perm"));
  CHECK_FALSE(pj["terms"][0].contains("cols"));
  CHECK(pj["terms"][0]["coeff"].is_string());

  const auto row = row_polytope_decompose(
      RationalMatrix{{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}});
  const auto rj = decomposition_to_json(row);
  CHECK(rj["kind"] == "row-vertex");
  CHECK(rj["terms"][0].contains("cols"));

  Eigen::MatrixXd m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  const auto realj = decomposition_to_json(birkhoff_decompose(m, 1e-12));
  CHECK(realj["terms"][0]["coeff"].is_number());
}

TEST_CASE("empirical JSON carries provenance and the exact reference") {
  const auto logic = load_logic("firefly.json");
  const auto labeling = canonical_partition_labels(enumerate_two_valued_states(logic));
  const auto u = uniform_measure(5);
  const UrnSpec spec{labeling, u, 77};
  const auto em = simulate_cond_prob(logic, spec, "C2", "C1", 1000, 2);
  const auto exact = classical_cond_prob_matrix(logic, labeling, u, "C2", "C1");

  const auto j = empirical_to_json(em, &exact);
  CHECK(j["generator"] == "mt19937_64");
  CHECK(j["seed"] == 77);
  CHECK(j["shards"] == 2);
  CHECK(j["draws"] == 1000);
  CHECK(j["counts"].size() == 3);
  CHECK(j["exact"][2] == ordered_json::array({"0", "0", "1"}));
  CHECK(j["max_abs_deviation"].is_number());
  CHECK(j["max_abs_deviation"].get<double>() <= 0.2);

  const auto bare = empirical_to_json(em, nullptr);
  CHECK_FALSE(bare.contains("exact"));
  CHECK_FALSE(bare.contains("max_abs_deviation"));

  const auto table = empirical_to_table(em, &exact);
  CHECK(table.find("draws: 1000") != std::string::npos);
  CHECK(table.find("max_abs_deviation:") != std::string::npos);
}

TEST_CASE("real matrix JSON keeps numbers as numbers") {
  Eigen::MatrixXd m(2, 2);
  m << 0.5, 0.5, 0.25, 0.75;
  const auto j = real_matrix_to_json(m, "R", "C", {"r1", "r2"}, {"c1", "c2"});
  CHECK(j["rows"] == "R");
  CHECK(j["entries"][1][0] == 0.25);
  const auto table = real_matrix_to_table(m, {"r1", "r2"}, {"c1", "c2"});
  CHECK(table.find("0.75") != std::string::npos);
}
