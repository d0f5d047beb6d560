#include "doctest.h"
#include "logres/io.hpp"
#include "logres/localalg.hpp"

using namespace logres;

namespace {

Field& Q() {
  static Field K(FieldSpec::rationals());
  return K;
}

TruncatedSeries mono(const Field& K, long c, int e) {
  return TruncatedSeries::monomial(K, K.fromInt(c), e);
}

BranchParam branchOf(std::vector<TruncatedSeries> coords) {
  BranchParam b;
  b.coords = std::move(coords);
  return b;
}

Polynomial poly2(const Field& K, std::vector<std::tuple<int, int, int>> terms) {
  Polynomial f = Polynomial::zero(2);
  for (auto& [i, j, c] : terms) f.addTerm(K, {i, j}, K.fromInt(c));
  return f;
}

Curve cusp() {
  auto& K = Q();
  return buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 3)})}, {},
                    poly2(K, {{3, 0, 1}, {0, 2, -1}}), 64);
}

// the cusp as its JSON input document
Json cuspJson() {
  return Json::parse(R"({
    "truncation": 64,
    "branches": [{"x": {"coeffs": {"2": "1"}}, "y": {"coeffs": {"3": "1"}}}],
    "equations": [[{"coeff": "-1", "exps": [3, 0]}, {"coeff": "1", "exps": [0, 2]}]]
  })");
}

std::vector<IVec> rows1(std::vector<int> xs) {
  std::vector<IVec> r;
  for (int x : xs) r.push_back({x});
  return r;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rationals and field elements round-trip") {
    auto& K = Q();
    CHECK(parseRat(Json("3/4"), "t") == Rat(3, 4));
    CHECK(parseRat(Json(-7), "t") == Rat(-7));
    CHECK(ratToString(parseRat(Json("6/4"), "t")) == "3/2");  // canonicalized
    CHECK_THROWS_AS(parseRat(Json("x"), "t"), InputError);
    CHECK_THROWS_AS(parseRat(Json::array(), "t"), InputError);
    CHECK(emitFieldElem(K, K.fromRat(Rat(5, 3))) == Json("5/3"));
    CHECK(parseFieldElem(K, Json("5/3"), "t") == K.fromRat(Rat(5, 3)));

    // a quadratic extension: elements are coordinate arrays
    Field K2 = parseField(Json::parse(R"({"min_poly": ["-2", "0", "1"]})"));
    CHECK(K2.deg() == 2);
    FieldElem z = K2.gen();
    Json ez = emitFieldElem(K2, z);
    CHECK(ez.is_array());
    CHECK(parseFieldElem(K2, ez, "t") == z);
    CHECK_THROWS_AS(parseFieldElem(K2, Json::parse(R"(["1"])"), "t"), InputError);
    CHECK_THROWS_AS(parseField(Json::parse(R"({"min_poly": ["1"]})")), InputError);
  }

  TEST_CASE("series round-trip and diagnostics") {
    auto& K = Q();
    Json sj = Json::parse(R"({"min_exp": -1, "trunc": 9, "coeffs": {"-1": "1/2", "3": "-2"}})");
    TruncatedSeries s = parseSeries(K, sj, "s");
    CHECK(s.minExp() == -1);
    CHECK(s.trunc() == 9);
    CHECK(s.at(K, -1) == K.fromRat(Rat(1, 2)));
    CHECK(s.at(K, 3) == K.fromInt(-2));
    CHECK(emitSeries(K, s) == sj);

    // exact shorthand and exact zero
    TruncatedSeries c = parseSeries(K, Json("7"), "s");
    CHECK(c.exact());
    CHECK(c.at(K, 0) == K.fromInt(7));
    CHECK(parseSeries(K, Json("0"), "s").storedEmpty());
    Json zj = Json::parse(R"({"trunc": 5, "coeffs": {}})");
    TruncatedSeries z = parseSeries(K, zj, "s");
    CHECK(z.trunc() == 5);

    CHECK_THROWS_AS(parseSeries(K, Json::parse(R"({"coeffs": {"a": "1"}})"), "s"),
                    InputError);
    CHECK_THROWS_AS(
        parseSeries(K, Json::parse(R"({"trunc": 3, "coeffs": {"4": "1"}})"), "s"),
        InputError);
    CHECK_THROWS_AS(
        parseSeries(K, Json::parse(R"({"min_exp": 2, "coeffs": {"1": "1"}})"), "s"),
        InputError);
  }

  TEST_CASE("polynomials round-trip") {
    auto& K = Q();
    Polynomial f = poly2(K, {{3, 0, 1}, {0, 2, -1}});
    Json fj = emitPolynomial(K, f);
    Polynomial g = parsePolynomial(K, fj, 2, "f");
    CHECK(g.terms == f.terms);
    CHECK(emitPolynomial(K, g) == fj);
    // inferred variable count and accumulation of repeated terms
    Polynomial h = parsePolynomial(
        K, Json::parse(R"([{"coeff": "1", "exps": [1, 1]}, {"coeff": "2", "exps": [1, 1]}])"),
        -1, "h");
    CHECK(h.nvars == 2);
    CHECK(h.terms.at({1, 1}) == K.fromInt(3));
    CHECK_THROWS_AS(parsePolynomial(K, Json::array(), -1, "h"), InputError);
    CHECK_THROWS_AS(
        parsePolynomial(K, Json::parse(R"([{"coeff": "1", "exps": [-1, 0]}])"), 2, "h"),
        InputError);
  }

  TEST_CASE("curves parse from JSON and match fixture-built ones") {
    Curve A = parseCurve(cuspJson());
    Curve B = cusp();
    CHECK(A.p == 1);
    CHECK(A.m == 2);
    CHECK(A.gamma == IVec{2});
    CHECK(A.delta == B.delta);
    CHECK(A.mu == B.mu);
    CHECK(sameMembership(A.valO, B.valO));
    CHECK(A.planeEquation.has_value());

    SUBCASE("seed branches are lifted against their equation") {
      Json j = Json::parse(R"({
        "truncation": 48,
        "branches": [{"seed": [{"2": "1"}, {"3": "1"}], "equation_index": 0}],
        "equations": [[{"coeff": "-1", "exps": [3, 0]}, {"coeff": "1", "exps": [0, 2]}]]
      })");
      Curve C = parseCurve(j);
      CHECK(C.gamma == IVec{2});
      CHECK(C.delta == 1);
      CHECK(sameMembership(C.valO, B.valO));
    }

    SUBCASE("exact branch data builds at any requested precision") {
      Curve C = parseCurve(cuspJson(), 4);
      CHECK(C.delta == 1);
    }

    SUBCASE("a low working precision is raised by relifting the seeds") {
      Json j = Json::parse(R"({
        "branches": [{"seed": [{"2": "1"}, {"3": "1"}]}],
        "equations": [[{"coeff": "-1", "exps": [3, 0]}, {"coeff": "1", "exps": [0, 2]}]]
      })");
      Curve C = parseCurve(j, 4);  // lifted series are truncated, so relift kicks in
      CHECK(C.N > 4);
      CHECK(C.delta == 1);
      CHECK(sameMembership(C.valO, B.valO));
    }

    SUBCASE("insufficient series data is a truncation error") {
      Json j = Json::parse(R"({
        "truncation": 64,
        "branches": [{"x": {"trunc": 5, "coeffs": {"2": "1"}},
                       "y": {"trunc": 5, "coeffs": {"3": "1"}}}],
        "equations": [[{"coeff": "-1", "exps": [3, 0]}, {"coeff": "1", "exps": [0, 2]}]]
      })");
      CHECK_THROWS_AS(parseCurve(j), TruncationError);
    }

    SUBCASE("malformed documents carry the offending path") {
      Json j = cuspJson();
      j["branches"][0].erase("y");
      j["branches"][0]["z"] = Json::parse(R"({"coeffs": {"1": "1"}})");
      CHECK_THROWS_WITH_AS(parseCurve(j), doctest::Contains("branches[0]"), InputError);
      Json k = cuspJson();
      k["equations"].push_back(k["equations"][0]);
      CHECK_THROWS_WITH_AS(parseCurve(k), doctest::Contains("equations"), InputError);
      CHECK_THROWS_AS(parseCurve(Json::parse(R"({"branches": []})")), InputError);
    }
  }

  TEST_CASE("ideals parse as presets or generator lists") {
    Curve C = cusp();
    FractionalIdeal J = parseIdeal(C, Json("jacobian"));
    CHECK(idealValues(J).lam == IVec{3});
    // the unit ideal is the ring
    FractionalIdeal O =
        parseIdeal(C, Json::parse(R"({"generators": [[{"coeffs": {"0": "1"}}]]})"));
    CHECK(sameMembership(idealValues(O), C.valO));
    CHECK_THROWS_AS(parseIdeal(C, Json("residuez")), InputError);
    CHECK_THROWS_AS(parseIdeal(C, Json::parse(R"({"generators": []})")), InputError);
    CHECK_THROWS_AS(parseIdeal(C, Json::parse(R"({"generators": [[{"coeffs": {"0": "1"}},
                                                                  {"coeffs": {"0": "1"}}]]})")),
                    InputError);
  }

  TEST_CASE("value sets and Laurent polynomials round-trip") {
    Curve C = cusp();
    Json vj = emitValueSet(C.valO);
    ValueSet v = parseValueSet(vj, "v");
    CHECK(sameMembership(v, C.valO));
    CHECK(emitValueSet(v) == vj);
    Json broken = vj;
    broken["box"] = Json::array();  // drops the corners the bounds promise
    CHECK_THROWS_AS(parseValueSet(broken, "v"), InputError);

    LaurentPoly P = poincarePoly(C.valO);
    Json pj = emitLaurent(P);
    LaurentPoly Q2 = parseLaurent(pj, "P");
    Q2.p = P.p;  // a Laurent document does not carry p when all terms vanish
    CHECK(Q2 == P);
    CHECK(emitLaurent(Q2) == pj);
  }

  TEST_CASE("analyze, dual and poincare reports") {
    Curve C = cusp();
    Json r = analyzeReport(C, VerifyLevel::Full);
    CHECK(r["gamma"] == Json::parse("[2]"));
    CHECK(r["delta"] == Json(1));
    CHECK(r["mu"] == Json(2));
    CHECK(r["tjurina_via_values"] == Json(2));
    CHECK(r["tjurina_direct"] == Json(2));
    CHECK(r["negative_residue_values"] == Json::parse("[[-1]]"));
    CHECK(r["zero_divisor_values"].empty());
    CHECK(r["semigroup_symmetric"] == Json(true));
    CHECK(r["quasihomogeneous"] == Json(true));
    for (const char* name :
         {"milnor_formula", "milnor_direct_agreement", "tjurina_agreement",
          "partial_value_identities", "branch_residue_inclusion", "dual_symmetry_vs_direct",
          "double_dual", "poincare_symmetry", "value_algorithm"})
      CHECK(r["checks"].contains(name));
    // emitted documents reparse to themselves
    CHECK(Json::parse(r.dump()) == r);
    std::string md = analyzeMarkdown(r);
    CHECK(md.find("| delta | 1 |") != std::string::npos);
    CHECK(md.find("Negative residue values: -1") != std::string::npos);

    Json d = dualReport(C, Json("jacobian"), VerifyLevel::Full);
    ValueSet dv = parseValueSet(d["dual_values"], "d");
    CHECK(dv.lam == IVec{-1});
    CHECK(dv.member({-1}));
    CHECK(dv.member({5}));
    CHECK(!dv.member({-2}));
    CHECK(d["checks"].contains("direct_agreement"));
    CHECK(d["checks"].contains("double_dual"));
    CHECK(Json::parse(d.dump()) == d);

    Json q = poincareReport(C, Json("O_D"));
    CHECK(q["poly_string"] == Json("1 - t + t^2"));
    CHECK(q["symmetric"] == Json(true));
    CHECK(Json::parse(q.dump()) == q);
    CHECK(poincareMarkdown(q).find("1 - t + t^2") != std::string::npos);
    CHECK(renderMarkdown(q) == poincareMarkdown(q));
  }

  TEST_CASE("strata plans parse, run and render") {
    Json pj = Json::parse(R"({
      "family": {
         "base": [{"coeff": "1", "exps": [5, 0]}, {"coeff": "-1", "exps": [0, 6]}],
         "monomials": [[2, 4], [3, 3], [3, 4]]
      },
      "samples": [[0, 0, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]]
    })");
    StrataPlan plan = parsePlan(pj);
    CHECK(plan.points.size() == 4);
    StrataReport scan = scanStrata(plan.family, plan.points, plan.truncation, 2,
                                   plan.seeds.empty() ? nullptr : &plan.seeds);
    Json r = strataReport(plan, scan);
    REQUIRE(r["strata"].size() == 4);
    CHECK(r["strata"][0]["stratum"] == Json("S20"));
    CHECK(r["strata"][1]["stratum"] == Json("S19"));
    CHECK(r["strata"][2]["stratum"] == Json("S18'"));
    CHECK(r["strata"][3]["stratum"] == Json("S18''"));
    CHECK(r["strata"][0]["dim"] == Json(10));
    CHECK(Json::parse(r.dump()) == r);
    std::string md = strataMarkdown(r);
    CHECK(md.find("| stratum | dim | negative values |") != std::string::npos);
    CHECK(md.find("| S20 | 10 | -1, -2, -3, -4, -7, -8, -9, -13, -14, -19 |") !=
          std::string::npos);
    CHECK(md.find("| S18' | 8 | -1, -2, -3, -4, -7, -8, -9, -14 |") != std::string::npos);

    SUBCASE("grids expand to the cartesian product") {
      Json gj = Json::parse(R"({
        "family": {
           "base": [{"coeff": "1", "exps": [5, 0]}, {"coeff": "-1", "exps": [0, 6]}],
           "monomials": [[2, 4], [3, 3]]
        },
        "samples": {"grid": [["0", "1"], ["0"]]}
      })");
      StrataPlan g = parsePlan(gj);
      REQUIRE(g.points.size() == 2);
      CHECK(g.points[0] == std::vector<FieldElem>{Q().fromInt(0), Q().fromInt(0)});
      CHECK(g.points[1] == std::vector<FieldElem>{Q().fromInt(1), Q().fromInt(0)});
    }

    SUBCASE("empty plans stay empty") {
      Json ej = pj;
      ej["samples"] = Json::array();
      StrataPlan e = parsePlan(ej);
      CHECK(e.points.empty());
      StrataReport es = scanStrata(e.family, e.points, e.truncation, 1, nullptr);
      Json er = strataReport(e, es);
      CHECK(er["strata"].empty());
      CHECK(strataMarkdown(er).find("0 samples") != std::string::npos);
    }

    SUBCASE("per-sample seeds reach the scanner") {
      // the base fiber again, but with its parametrization supplied by hand
      Json sj = pj;
      sj["samples"] = Json::parse("[[0, 0, 0]]");
      sj["seeds"] = Json::parse(
          R"({"0": {"x": {"coeffs": {"6": "1"}}, "y": {"coeffs": {"5": "1"}}}})");
      StrataPlan s = parsePlan(sj);
      REQUIRE(s.seeds.count(0) == 1);
      StrataReport ss = scanStrata(s.family, s.points, s.truncation, 1, &s.seeds);
      CHECK(ss.samples[0].parametrized);
      CHECK(ss.samples[0].tjurinaViaValues == 20);
      CHECK(ss.samples[0].negatives ==
            rows1({-19, -14, -13, -9, -8, -7, -4, -3, -2, -1}));
    }

    SUBCASE("bad plans carry diagnostics") {
      Json bj = pj;
      bj["samples"] = Json::parse("[[0, 0]]");
      CHECK_THROWS_WITH_AS(parsePlan(bj), doctest::Contains("samples[0]"), InputError);
      Json wj = pj;
      wj["family"]["monomials"].push_back(Json::parse("[0, 6]"));  // weight 30 = 5*6
      CHECK_THROWS_AS(parsePlan(wj), InputError);
    }
  }

  TEST_CASE("verification levels parse strictly") {
    CHECK(parseVerifyLevel("none") == VerifyLevel::None);
    CHECK(parseVerifyLevel("cross-check") == VerifyLevel::CrossCheck);
    CHECK(parseVerifyLevel("full") == VerifyLevel::Full);
    CHECK_THROWS_AS(parseVerifyLevel("paranoid"), InputError);
  }
}
