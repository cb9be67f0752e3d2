#include <doctest.h>

#include <json.hpp>

#include "pdr/analyze.hpp"
#include "pdr/parse.hpp"
#include "pdr/render.hpp"

using namespace pdr;

TEST_CASE("parse_divisor: basic grammar") {
  auto d = parse_divisor("2 - 1/2 - 2/3 - 4/5");
  REQUIRE(d.terms().size() == 4);
  CHECK(d.terms().at("P0") == Rational(2));
  CHECK(d.terms().at("P1") == Rational(-1, 2));
  CHECK(d.terms().at("P2") == Rational(-2, 3));
  CHECK(d.terms().at("P3") == Rational(-4, 5));

  auto ex1 = normalize(parse_divisor("2 - 3/5 - 4/5 - 1/2"));
  CHECK(ex1 == NormalizedDivisor(2, {Rational(3, 5), Rational(4, 5), Rational(1, 2)}));
}

TEST_CASE("parse_divisor: labels and summation") {
  auto d = parse_divisor("1/2@A + 2/3@A");
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms().at("A") == Rational(7, 6));

  // auto labels skip explicit names
  auto e = parse_divisor("3@P0 - 1/2 - 1/3@P1");
  CHECK(e.terms().at("P0") == Rational(3));
  CHECK(e.terms().at("P1") == Rational(-1, 3));
  CHECK(e.terms().count("P2") == 1);  // the unlabeled -1/2
  CHECK(e.terms().at("P2") == Rational(-1, 2));
}

TEST_CASE("parse_divisor: JSON form") {
  auto d = parse_divisor(R"({"A": "3/2", "B": "-1/3", "C": 2})");
  CHECK(d.terms().at("A") == Rational(3, 2));
  CHECK(d.terms().at("B") == Rational(-1, 3));
  CHECK(d.terms().at("C") == Rational(2));
}

TEST_CASE("parse_divisor: errors carry positions") {
  CHECK_THROWS_AS(parse_divisor(""), parse_error);
  CHECK_THROWS_AS(parse_divisor("2 - x"), parse_error);
  CHECK_THROWS_AS(parse_divisor("2 + 1/"), parse_error);
  CHECK_THROWS_AS(parse_divisor("{\"A\": 1.5}"), parse_error);
  try {
    parse_divisor("2 - 1/0");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 6);
  }
  try {
    parse_divisor("2 ~ 1/2");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("render_graph: ascii layout") {
  auto d = NormalizedDivisor(2, {Rational(3, 5), Rational(4, 5), Rational(1, 2)});
  auto g = dual_graph(d);
  auto z = fundamental_cycle(d);
  auto text = render_graph(g, &z, RenderFormat::ascii);
  CHECK(text.find("E0 [-2](5)") != std::string::npos);
  CHECK(text.find("[-2](3) - [-3](1)") != std::string::npos);
  CHECK(text.find("[-2](4) - [-2](3) - [-2](2) - [-2](1)") != std::string::npos);

  auto cone = dual_graph(NormalizedDivisor(3, {}));
  auto cone_text = render_graph(cone, nullptr, RenderFormat::ascii);
  CHECK(cone_text == "E0 [-3]\n");
}

TEST_CASE("render_graph: DOT output") {
  auto d = NormalizedDivisor(2, {Rational(7, 9), Rational(1, 2), Rational(2, 3)});
  auto g = dual_graph(d);
  REQUIRE(g.branches().size() == 3);
  CHECK(g.branches()[0].size() == 4);
  CHECK(g.branches()[1].size() == 1);
  CHECK(g.branches()[2].size() == 2);
  auto text = render_graph(g, nullptr, RenderFormat::dot);
  CHECK(text.rfind("graph dual_graph {", 0) == 0);
  // a tree: edges = vertices - 1
  std::size_t edges = 0, from = 0;
  while ((from = text.find(" -- ", from)) != std::string::npos) {
    ++edges;
    from += 4;
  }
  CHECK(edges == g.vertex_count() - 1);
  CHECK(text.find("}") != std::string::npos);
}

TEST_CASE("analyze: composition matches the library calls") {
  AnalysisOptions options;
  options.primes = {2, 5};
  auto report = analyze("2 - 3/5 - 4/5 - 1/2", parse_divisor("2 - 3/5 - 4/5 - 1/2"), options);
  CHECK(report.normalized->s() == 2);
  CHECK(*report.multiplicity == 3);
  REQUIRE(report.prime_verdicts.size() == 2);
  for (const auto& pv : report.prime_verdicts) {
    CHECK_FALSE(pv.verdict.f_rational);
    CHECK(pv.verdict.witness->n == 1);
  }
  REQUIRE(report.failing.has_value());
  CHECK(*report.failing == std::set<long long>{2, 5});
  bool e39 = false;
  for (const auto& m : report.matches_e3) e39 |= m.family_id == "e3.9";
  CHECK(e39);
}

TEST_CASE("analyze: F-rational for every characteristic") {
  AnalysisOptions options;
  options.primes = {2, 3, 5, 7};
  options.verify = true;
  auto report = analyze("2 - 1/3 - 1/3 - 1/3", parse_divisor("2 - 1/3 - 1/3 - 1/3"), options);
  for (const auto& pv : report.prime_verdicts) CHECK(pv.verdict.f_rational);
  CHECK(report.failing->empty());
  CHECK(report.verified);
}

TEST_CASE("analyze: integral divisor (cone)") {
  AnalysisOptions options;
  options.primes = {2, 3, 5, 7, 11, 13};
  options.verify = true;
  auto report = analyze("4", parse_divisor("4"), options);
  CHECK(report.rationality.rational);
  CHECK(*report.multiplicity == 4);
  for (const auto& pv : report.prime_verdicts) CHECK(pv.verdict.f_rational);
  CHECK(report.failing->empty());
}

TEST_CASE("analyze: rejects non-ample input") {
  AnalysisOptions options;
  CHECK_THROWS_AS(analyze("1 - 1/2 - 1/2", parse_divisor("1 - 1/2 - 1/2"), options),
                  domain_error);
}

TEST_CASE("analysis JSON is valid, deterministic, and lossless on key fields") {
  AnalysisOptions options;
  options.primes = {5};
  auto report = analyze("2 - 3/5 - 4/5 - 1/2", parse_divisor("2 - 3/5 - 4/5 - 1/2"), options);
  auto text = report_to_json(report);
  CHECK(text == report_to_json(report));
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "pdring.analysis/1");
  CHECK(j["normalized"]["s"] == 2);
  CHECK(j["degree"] == "1/10");
  CHECK(j["period"] == 10);
  CHECK(j["multiplicity"] == 3);
  CHECK(j["f_rationality"][0]["verdict"] == "not_f_rational");
  CHECK(j["f_rationality"][0]["witness"]["value"] == 2);
  CHECK(j["failing_primes"] == std::vector<long long>{2, 5});
}
