/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "piqec/io.hpp"

using namespace piqec;

TEST_CASE("dump_deterministic freezes formatting") {
  Json value;
  value["zeta"] = 1.0;
  value["alpha"] = 0.1;
  value["mid"] = Json::array({1, true, "x", Json(0.5)});
  const std::string expected =
      "{\n"
      "  \"alpha\": 0.10000000000000001,\n"
      "  \"mid\": [\n"
      "    1,\n"
      "    true,\n"
      "    \"x\",\n"
      "    0.5\n"
      "  ],\n"
      "  \"zeta\": 1.0\n"
      "}";
  CHECK(dump_deterministic(value) == expected);

  // Floats that print like integers get a trailing .0 marker; real integers
  // stay bare.
  CHECK(dump_deterministic(Json(2.0)) == "2.0");
  CHECK(dump_deterministic(Json(2)) == "2");
  CHECK(dump_deterministic(Json(-0.0)) == "-0.0");
  CHECK(dump_deterministic(Json(1e300)) == "1.0000000000000001e+300");
  CHECK(dump_deterministic(Json::array()) == "[]");
  CHECK(dump_deterministic(Json::object()) == "{}");
  CHECK_THROWS_AS(
      dump_deterministic(Json(std::numeric_limits<double>::infinity())),
      std::runtime_error);

  // Identical content always yields identical bytes.
  Json again;
  again["mid"] = Json::array({1, true, "x", Json(0.5)});
  again["alpha"] = 0.1;
  again["zeta"] = 1.0;
  CHECK(dump_deterministic(again) == expected);
}

TEST_CASE("17 significant digits round-trip doubles exactly") {
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const double x = rng.normal() * std::pow(10.0, rng.uniform() * 40 - 20);
    const Json parsed = Json::parse(dump_deterministic(Json(x)));
    CHECK(parsed.get<double>() == x);
  }
}

TEST_CASE("complex values serialize as [re, im]") {
  const Complex z{0.5, -1.25};
  const Json j = complex_to_json(z);
  CHECK(j.is_array());
  CHECK(complex_from_json(j) == z);
  CHECK(complex_from_json(Json(2.5)) == Complex(2.5, 0.0));
  CHECK_THROWS_AS(complex_from_json(Json::array({1.0})),
                  std::runtime_error);
  CHECK_THROWS_AS(complex_from_json(Json("x")), std::runtime_error);

  Vector v(2);
  v << Complex(1.0, 2.0), Complex(-3.0, 0.0);
  const Vector back = complex_vector_from_json(complex_vector_to_json(v));
  CHECK((back - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("code files round-trip and validate") {
  const PICode code = gnu_code(2, 2);
  const Json j = code_to_json(code);
  const PICode back = code_from_json(j);
  CHECK(back.N == 4);
  CHECK((back.alpha - code.alpha).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.beta - code.beta).cwiseAbs().maxCoeff() == 0.0);

  // A list of codes parses from either an object or an array.
  CHECK(codes_from_json(j).size() == 1);
  CHECK(codes_from_json(Json::array({j, j})).size() == 2);

  Json bad = j;
  bad.erase("beta");
  CHECK_THROWS_AS(code_from_json(bad), std::runtime_error);
  bad = j;
  bad["alpha"][0] = Json::array({0.9, 0.0});  // breaks normalization
  CHECK_THROWS_AS(code_from_json(bad), OrthonormalityViolation);
  bad = j;
  bad["N"] = 3;  // wrong coefficient count
  CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);
}

TEST_CASE("channel files parse kinds and distributions") {
  Json j;
  j["kind"] = "full-insdel";
  j["t"] = 1;
  j["s"] = 1;
  const ChannelSpec spec = channel_spec_from_json(j);
  CHECK(spec.kind == ChannelKind::full_insdel);
  CHECK(spec.t == 1);
  CHECK(spec.s == 1);
  CHECK(spec.structure_distribution.empty());  // uniform default

  Json explicit_spec;
  explicit_spec["kind"] = "insertion";
  explicit_spec["t"] = 1;
  explicit_spec["structures"] =
      Json::array({Json{{"parts", Json::array({1, 0, 0})}, {"p", 0.25}},
                   Json{{"parts", Json::array({0, 0, 1})}, {"p", 0.75}}});
  explicit_spec["insertion_states"] = Json::array(
      {Json{{"amplitudes", Json::array({Json::array({1.0, 0.0}),
                                        Json::array({0.0, 0.0})})},
            {"weight", 1.0}}});
  const ChannelSpec parsed = channel_spec_from_json(explicit_spec);
  CHECK(parsed.structure_distribution.size() == 2);
  CHECK(parsed.structure_distribution[1].second == 0.75);
  CHECK(parsed.insertion_states.size() == 1);
  CHECK(parsed.insertion_states[0].first.v(0) == Complex(1.0));

  Json del;
  del["kind"] = "deletion";
  del["s"] = 2;
  del["deletions"] = Json::array(
      {Json{{"positions", Json::array({1, 3})}, {"p", 1.0}}});
  CHECK(channel_spec_from_json(del).deletion_distribution.size() == 1);

  CHECK_THROWS_AS(channel_spec_from_json(Json{{"t", 1}}),
                  std::runtime_error);  // kind required
  CHECK_THROWS_AS(channel_spec_from_json(Json{{"kind", "melt"}}),
                  std::runtime_error);
}

TEST_CASE("state files carry one construction each") {
  Json random;
  random["random_pi"] = Json{{"N", 3}, {"seed", 5}};
  const Matrix rho = state_from_json(random);
  CHECK(rho.rows() == 8);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  // Same bytes as building it directly.
  Rng rng(5);
  CHECK((rho - random_pi_density(3, rng)).cwiseAbs().maxCoeff() == 0.0);

  Json logical;
  logical["logical"] = Json{{"code", code_to_json(gnu_code(2, 2))},
                            {"c0", Json::array({1.0, 0.0})},
                            {"c1", Json::array({0.0, 0.0})}};
  const Matrix pure = state_from_json(logical);
  CHECK(pure.rows() == 16);
  CHECK(std::abs(pure(0, 0).real() - 0.5) < 1e-12);

  Json dicke;
  dicke["dicke"] =
      Json{{"N", 1},
           {"matrix", Json::array({Json::array({0.5, 0.0}),
                                   Json::array({0.0, 0.5})})}};
  const Matrix mixed = state_from_json(dicke);
  CHECK((mixed - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  Json dense;
  dense["dense"] = Json{
      {"N", 1},
      {"rho", Json::array({Json::array({Json::array({0.5, 0.0}),
                                        Json::array({0.0, 0.0})}),
                           Json::array({Json::array({0.0, 0.0}),
                                        Json::array({0.5, 0.0})})})}};
  CHECK((state_from_json(dense) - 0.5 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  Json both;
  both["random_pi"] = Json{{"N", 2}, {"seed", 1}};
  both["dicke"] = dicke["dicke"];
  CHECK_THROWS_AS(state_from_json(both), std::runtime_error);
  CHECK_THROWS_AS(state_from_json(Json::object()), std::runtime_error);
}

TEST_CASE("search problem files mirror the struct") {
  Json j;
  j["N"] = 4;
  j["family"] = "deletion";
  j["s"] = 1;
  j["seed"] = 42;
  j["num_starts"] = 3;
  const SearchProblem problem = search_problem_from_json(j);
  CHECK(problem.N == 4);
  CHECK(problem.family == ConditionFamily::deletion);
  CHECK(problem.s == 1);
  CHECK(problem.seed == 42);
  CHECK(problem.num_starts == 3);
  CHECK(problem.max_iterations == 400);  // defaulted

  CHECK_THROWS_AS(search_problem_from_json(Json{{"N", 2}}),
                  std::runtime_error);  // family required
}

TEST_CASE("family and kind names round-trip") {
  for (ConditionFamily family :
       {ConditionFamily::insertion, ConditionFamily::deletion,
        ConditionFamily::semi_insdel, ConditionFamily::full_insdel})
    CHECK(family_from_name(family_name(family)) == family);
  CHECK(family_name(ConditionFamily::semi_insdel) == "semi-insdel");
  CHECK_THROWS_AS(family_from_name("bogus"), std::runtime_error);

  for (ChannelKind kind :
       {ChannelKind::insertion, ChannelKind::deletion,
        ChannelKind::semi_insdel, ChannelKind::full_insdel})
    CHECK(channel_kind_from_name(channel_kind_name(kind)) == kind);
}

TEST_CASE("report serializers emit parseable deterministic JSON") {
  const PICode code = gnu_code(2, 2);

  const Json cond = condition_report_to_json(eval_insertion_conditions(code, 1));
  CHECK(cond["passed"] == true);
  CHECK(cond["family"] == "insertion");
  CHECK(cond["terms"].size() == 10);
  CHECK(Json::parse(dump_deterministic(cond)) == cond);

  const Json kl = kl_result_to_json(oracle_deletion(code, 2));
  CHECK(kl["passed"] == false);
  CHECK(kl["num_operators"] == 24);  // C(4, 2) position sets * 4 bitstrings
  CHECK(Json::parse(dump_deterministic(kl)) == kl);

  const Json equiv = equivalence_report_to_json(equivalence_check(code, 1));
  CHECK(equiv["agree"] == true);
  CHECK(equiv["insertion_passed"] == true);
  CHECK(equiv["all_deletions_passed"] == true);
  CHECK(Json::parse(dump_deterministic(equiv)) == equiv);

  Matrix rho = 0.25 * Matrix::Identity(4, 4);
  ChannelSpec spec;
  spec.kind = ChannelKind::full_insdel;
  spec.t = 1;
  spec.s = 1;
  const Json cert =
      swap_certificate_to_json(swap_lemma_verify(rho, spec), true);
  CHECK(cert["passed"] == true);
  CHECK(cert["ell_weights"].size() == 2);
  CHECK(cert.contains("phi_table"));
  const Json cert_lean =
      swap_certificate_to_json(swap_lemma_verify(rho, spec), false);
  CHECK(!cert_lean.contains("phi_table"));

  SearchProblem problem;
  problem.N = 2;
  problem.family = ConditionFamily::deletion;
  problem.s = 0;
  const Json search = search_result_to_json(find_code(problem));
  CHECK(search["converged"] == true);
  CHECK(Json::parse(dump_deterministic(search)) == search);
}

TEST_CASE("text printers include the verdict") {
  const PICode code = gnu_code(2, 2);
  std::ostringstream out;
  print_condition_report(out, eval_insertion_conditions(code, 1), false);
  CHECK(out.str().find("PASS") != std::string::npos);
  std::ostringstream bad;
  print_condition_report(bad, eval_insertion_conditions(code, 2), true);
  CHECK(bad.str().find("FAIL") != std::string::npos);
}

TEST_CASE("json files read back what was written") {
  const std::string path = "piqec_io_test.json";
  Json value;
  value["x"] = 1.5;
  value["y"] = Json::array({1, 2, 3});
  write_json_file(path, value);
  CHECK(load_json_file(path) == value);
  std::remove(path.c_str());

  std::ofstream bad("piqec_io_bad.json");
  bad << "{ not json";
  bad.close();
  CHECK_THROWS_AS(load_json_file("piqec_io_bad.json"), std::runtime_error);
  std::remove("piqec_io_bad.json");
  CHECK_THROWS_AS(load_json_file("piqec_io_missing.json"),
                  std::runtime_error);
}
