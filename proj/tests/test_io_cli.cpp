#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "monfact/cli.hpp"
#include "monfact/families.hpp"

using namespace monfact;
using io::Json;

namespace {

const BudgetLimits kLimits{};

}  // namespace

TEST_CASE("set parsing and round trips") {
  CHECK(io::parse_natset("{0, 1, 4}") == NatSet{0, 1, 4});
  CHECK(io::parse_natset("[4,1,0]") == NatSet{0, 1, 4});
  CHECK(io::parse_natset("0,1,4") == NatSet{0, 1, 4});
  CHECK_THROWS_AS(io::parse_natset("{0,1"), ParseError);
  CHECK_THROWS_AS(io::parse_natset("{0,-1}"), ParseError);
  CHECK_THROWS_AS(io::parse_natset("{}"), ParseError);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    std::vector<Nat> v{rng() % 50};
    for (int i = 0; i < 6; ++i) v.push_back(rng() % 50);
    const NatSet s = NatSet::from_elements(v);
    CHECK(io::parse_natset(to_string(s)) == s);
    CHECK(io::natset_from_json(Json::parse(io::to_json(s).dump())) == s);
  }
}

TEST_CASE("sequence parsing") {
  CHECK(io::parse_sequence("1,3,9,22") == SumSequence::minimal(3));
  CHECK(io::parse_sequence("[1,3,7]") == SumSequence::minimal(2));
  CHECK_THROWS_AS(io::parse_sequence("1,3,8"), DomainError);
  const auto s = SumSequence::minimal(4);
  CHECK(io::parse_sequence(io::to_json(s).dump()) == s);
}

TEST_CASE("ideal parsing and round trips") {
  CHECK(io::parse_ideal("X^4, X^3 Y, X^2 Y^2, Y^4") == build_c(4));
  CHECK(io::parse_ideal("<X^2, Y^2>") == build_b(2));
  CHECK(io::parse_ideal("x*y^2, X^3") == MonIdeal::from_generators({{1, 2}, {3, 0}}));
  CHECK(io::parse_ideal("1") == MonIdeal::unit());
  CHECK(io::parse_ideal(R"({"gens": [[2,0],[0,3]]})") == MonIdeal::from_generators({{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(io::parse_ideal("X^2, Z"), ParseError);
  CHECK_THROWS_AS(io::parse_ideal("X^"), ParseError);
  CHECK_THROWS_AS(io::parse_ideal("X X"), ParseError);
  CHECK_THROWS_AS(io::parse_ideal(R"({"gens": [[1]]})"), ParseError);
  for (const MonIdeal& i : {build_a(3), build_c(7), build_I_B(SumSequence::minimal(3)), MonIdeal::unit()}) {
    CHECK(io::parse_ideal(to_string(i)) == i);
    CHECK(io::ideal_from_json(io::to_json(i)) == i);
  }
}

TEST_CASE("graded ideal JSON") {
  const GradedIdeal2 g({HomPoly::monomial(2, 0), HomPoly({0, 1, Rational(-1, 2)})});
  const Json j = io::to_json(g);
  CHECK(j["gens"][1]["coeffs"][2] == "-1/2");
  CHECK(equals(io::graded_from_json(j), g));
  CHECK(io::hompoly_from_json(j["gens"][1]) == g.gens[1]);
  CHECK_THROWS_AS(io::hompoly_from_json(Json::parse(R"({"deg": 2, "coeffs": ["1"]})")), ParseError);
}

TEST_CASE("target grammar") {
  using cli::parse_target;
  CHECK(std::get<MonIdeal>(parse_target("c4")) == build_c(4));
  CHECK(std::get<MonIdeal>(parse_target("c_7")) == build_c(7));
  CHECK(std::get<MonIdeal>(parse_target("a_5")) == build_a(5));
  CHECK(std::get<MonIdeal>(parse_target("b3")) == build_b(3));
  CHECK(std::get<MonIdeal>(parse_target("phi {0,1,2,4}")) == build_c(4));
  CHECK(std::get<MonIdeal>(parse_target("I_B --minimal 2")) == build_I_B(SumSequence::minimal(2)));
  CHECK(std::get<MonIdeal>(parse_target("I_C --seq 1,3,9,22")) == build_I_C(SumSequence::minimal(3)));
  CHECK(std::get<MonIdeal>(parse_target("tilde_b --minimal 3 --r 3")) ==
        build_tilde_b(SumSequence::minimal(3), 3));
  CHECK(std::get<NatSet>(parse_target("C --minimal 3")) == build_C(SumSequence::minimal(3)));
  CHECK(std::get<NatSet>(parse_target("delta_even_2")) == NatSet{1, 2, 4});
  CHECK(std::get<NatSet>(parse_target("beta_4")) == NatSet{4});
  CHECK(std::get<NatSet>(parse_target("{0,1,2}")) == NatSet{0, 1, 2});
  CHECK(std::get<MonIdeal>(parse_target("X^2, Y^3")) == MonIdeal::from_generators({{2, 0}, {0, 3}}));
  cli::FamilyArgs defaults;
  defaults.minimal = 2;
  CHECK(std::get<MonIdeal>(parse_target("I_B", defaults)) == build_I_B(SumSequence::minimal(2)));
  CHECK_THROWS_AS(parse_target("I_B"), ParseError);
  CHECK_THROWS_AS(parse_target("tilde_b --minimal 3"), ParseError);
  CHECK_THROWS_AS(parse_target("I_B --minimal"), ParseError);
  CHECK_THROWS_AS(parse_target("I_B --bogus 1"), ParseError);
  CHECK_THROWS_AS(parse_target("q_7"), ParseError);
  CHECK_THROWS_AS(parse_target(""), ParseError);
}

TEST_CASE("atom command") {
  using cli::MonoidKind;
  auto r = cli::cmd_atom(cli::parse_target("c4"), MonoidKind::mon, kLimits);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.output.dump() == R"({"atom":true,"witness":null})");
  r = cli::cmd_atom(cli::parse_target("{0,1,2}"), MonoidKind::pfin0, kLimits);
  CHECK(r.output.dump() == R"({"atom":false,"witness":[[0,1],[0,1]]})");
  r = cli::cmd_atom(cli::parse_target("I_B --minimal 2"), MonoidKind::mon, kLimits);
  CHECK(r.output["atom"] == true);
  r = cli::cmd_atom(cli::parse_target("{2,3}"), MonoidKind::pfin, kLimits);
  CHECK(r.output["atom"] == false);
  CHECK(r.output["witness"].dump() == "[[2],[0,1]]");
  r = cli::cmd_atom(cli::parse_target("a_2"), MonoidKind::mon, kLimits);
  CHECK(r.output["atom"] == false);
  CHECK(r.output["witness"].dump() == R"(["X, Y","X, Y"])");
  r = cli::cmd_atom(cli::parse_target("a_9"), MonoidKind::mon, BudgetLimits{3, 10.0, 1});
  CHECK(r.exit_code == cli::kExitInconclusive);
  CHECK(r.output["atom"] == "inconclusive");
  CHECK_THROWS_AS(cli::cmd_atom(cli::parse_target("c4"), MonoidKind::pfin0, kLimits), ParseError);
  CHECK_THROWS_AS(cli::cmd_atom(cli::parse_target("{1,2}"), MonoidKind::pfin0, kLimits), DomainError);
}

TEST_CASE("lengths command") {
  using cli::MonoidKind;
  auto r = cli::cmd_lengths(cli::parse_target("a_5"), MonoidKind::mon, kLimits);
  CHECK(r.output.dump() == R"({"lengths":[2,3,4,5],"delta":[1],"rho":"5/2"})");
  r = cli::cmd_lengths(cli::parse_target("C --minimal 3"), MonoidKind::pfin0, kLimits);
  CHECK(r.output["lengths"].dump() == "[2,4]");
  r = cli::cmd_lengths(cli::parse_target("b_3"), MonoidKind::mon, kLimits);
  CHECK(r.output["lengths"].dump() == "[1]");
  r = cli::cmd_lengths(cli::parse_target("{3,4}"), MonoidKind::pfin, kLimits);
  CHECK(r.output["lengths"].dump() == "[4]");
}

TEST_CASE("build, verify and experiment commands") {
  auto r = cli::cmd_build(cli::parse_target("tilde_b --seq 1,3,9,22 --r 3"));
  CHECK(r.output["ideal"] == "X^10, X^9 Y, X^6 Y^6, X Y^9, Y^10");
  CHECK(r.output["mdeg"] == 10);
  r = cli::cmd_list_claims();
  CHECK(r.output.size() == 11);
  CHECK(r.output[0]["id"] == "atoms-mon");

  cli::ExperimentParams p;
  p.max = 14;
  p.samples = 500;
  p.seed = 7;
  const auto first = cli::cmd_experiment("atom-density", p);
  const double f = first.output["fraction"];
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
  CHECK(first.output["seed"] == 7);
  CHECK(cli::cmd_experiment("atom-density", p).output == first.output);
  p.samples = 0;
  CHECK_THROWS_AS(cli::cmd_experiment("atom-density", p), DomainError);
  p.max = 9;
  const auto transport = cli::cmd_experiment("phi-transport", p);
  CHECK(transport.output["counterexamples"].empty());
  CHECK(transport.output["checked"] > 0);
  CHECK_THROWS_AS(cli::cmd_experiment("nope", p), ParseError);
  CHECK_THROWS_AS(cli::parse_monoid("ring"), ParseError);
}

TEST_CASE("verify output is deterministic across parallelism") {
  VerifyOptions serial;
  VerifyOptions wide;
  wide.limits.parallelism = 4;
  const auto a = run_claim("lengths-mon", serial);
  const auto b = run_claim("lengths-mon", wide);
  CHECK(a.status == Status::pass);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
  const auto r = cli::cmd_verify("stretch", serial);
  CHECK(r.output.size() == 1);
  CHECK(r.output[0]["status"] == "pass");
  CHECK_THROWS_AS(run_claim("missing", serial), DomainError);
  CHECK(cli::format_table({a}).find("lengths-mon") != std::string::npos);
}
