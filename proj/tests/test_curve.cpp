#include "doctest.h"
#include "logres/curve.hpp"

using namespace logres;

namespace {
Field& Q() {
  static Field K(FieldSpec::rationals());
  return K;
}

TruncatedSeries mono(const Field& K, int c, int e) {
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
}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("cusp from an explicit parametrization") {
    auto& K = Q();
    auto C = buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 3)})}, {}, {}, 64);
    CHECK(C.p == 1);
    CHECK(C.branches[0].mult == 2);
    CHECK(C.branchConductor[0] == 2);
    CHECK(C.branchSemigroup[0].count(0) == 1);
    CHECK(C.branchSemigroup[0].count(1) == 0);
    CHECK(C.branchSemigroup[0].count(2) == 1);
    CHECK(C.branchSemigroup[0].count(3) == 1);
    CHECK(C.gamma == IVec{2});
    CHECK(C.delta == 1);
    CHECK(C.mu == 2);
    CHECK(C.valO.box == std::set<IVec>{{0}, {2}});
  }

  TEST_CASE("cusp from its equation") {
    auto& K = Q();
    auto f = poly2(K, {{3, 0, 1}, {0, 2, -1}});  // x^3 - y^2
    auto C = buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 3)})}, {}, f, 64);
    CHECK(C.planeEquation.has_value());
    CHECK(C.gamma == IVec{2});
    CHECK(C.delta == 1);
    // equation not vanishing on the branch is rejected
    auto g = poly2(K, {{3, 0, 1}, {0, 2, 1}});  // x^3 + y^2
    CHECK_THROWS_AS(buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 3)})}, {}, g, 64),
                    InputError);
  }

  TEST_CASE("hidden semigroup value through cancellation") {
    auto& K = Q();
    // (t^4, t^6 + t^7): y^2 - x^3 = 2t^13 + t^14 reveals 13
    auto y = tsAdd(K, mono(K, 1, 6), mono(K, 1, 7));
    auto C = buildCurve(K, {branchOf({mono(K, 1, 4), y})}, {}, {}, 96);
    auto& S = C.branchSemigroup[0];
    CHECK(S.count(4) == 1);
    CHECK(S.count(6) == 1);
    CHECK(S.count(13) == 1);
    CHECK(S.count(15) == 0);
    CHECK(C.branchConductor[0] == 16);
    CHECK(C.gamma == IVec{16});
    CHECK(C.delta == 8);
    CHECK(C.mu == 16);
  }

  TEST_CASE("quasihomogeneous parametrization and its deformation") {
    auto& K = Q();
    auto f0 = poly2(K, {{5, 0, 1}, {0, 6, -1}});  // x^5 - y^6
    auto br0 = sqhParametrize(K, f0, 56);
    REQUIRE(br0.has_value());
    CHECK(br0->coords[0].at(K, 6) == K.one());
    CHECK(br0->coords[1].at(K, 5) == K.one());
    CHECK(!f0.evalSeries(K, br0->coords).order(K).has_value());

    // x^5 - y^6 + x^3 y^4 needs corrections: first one is t^13 / 6 on y
    auto f1 = poly2(K, {{5, 0, 1}, {0, 6, -1}, {3, 4, 1}});
    auto br1 = sqhParametrize(K, f1, 56);
    REQUIRE(br1.has_value());
    CHECK(br1->coords[1].at(K, 5) == K.one());
    CHECK(br1->coords[1].at(K, 13) == K.div(K.one(), K.fromInt(6)));
    auto res = f1.evalSeries(K, br1->coords);
    auto o = res.order(K);
    // residual pushed beyond the requested window
    CHECK(!(o.has_value() && *o < 56));

    // both curves share the semigroup <5,6>
    for (auto* br : {&*br0, &*br1}) {
      auto C = buildCurve(K, {*br}, {}, {}, 56);
      CHECK(C.gamma == IVec{20});
      CHECK(C.delta == 10);
      CHECK(C.mu == 20);
      CHECK(C.branchSemigroup[0].count(19) == 0);
      CHECK(C.branchSemigroup[0].count(11) == 1);
    }
  }

  TEST_CASE("shape recognition") {
    auto& K = Q();
    CHECK(detectSqhShape(K, poly2(K, {{5, 0, 1}, {0, 6, -1}})).has_value());
    CHECK(detectSqhShape(K, poly2(K, {{5, 0, 1}, {0, 6, -1}, {2, 4, 7}})).has_value());
    // gcd(a, b) must be 1
    CHECK(!detectSqhShape(K, poly2(K, {{4, 0, 1}, {0, 6, -1}})).has_value());
    // low-weight deformation breaks the shape
    CHECK(!detectSqhShape(K, poly2(K, {{5, 0, 1}, {0, 6, -1}, {1, 1, 1}})).has_value());
    // wrong signs
    CHECK(!detectSqhShape(K, poly2(K, {{5, 0, 1}, {0, 6, 1}})).has_value());
  }

  TEST_CASE("tacnode: two smooth branches with contact of order two") {
    auto& K = Q();
    auto b1 = branchOf({mono(K, 1, 1), mono(K, 1, 2)});   // (t, t^2)
    auto b2 = branchOf({mono(K, 1, 1), mono(K, -1, 2)});  // (t, -t^2)
    auto f1 = poly2(K, {{0, 1, 1}, {2, 0, -1}});           // y - x^2
    auto f2 = poly2(K, {{0, 1, 1}, {2, 0, 1}});            // y + x^2
    auto C = buildCurve(K, {b1, b2}, {f1, f2}, {}, 64);
    CHECK(C.branchConductor == std::vector<int>{0, 0});
    CHECK(C.intersections[0][1] == 2);
    CHECK(C.intersections[1][0] == 2);
    CHECK(C.gamma == IVec{2, 2});
    CHECK(C.delta == 2);
    CHECK(C.mu == 3);
    CHECK(C.valO.box == std::set<IVec>{{0, 0}, {1, 1}, {2, 2}});
    // the product equation y^2 - x^4 is accepted, a wrong one is not
    auto prod = poly2(K, {{0, 2, 1}, {4, 0, -1}});
    auto C2 = buildCurve(K, {b1, b2}, {f1, f2}, prod, 64);
    CHECK(C2.gamma == IVec{2, 2});
    auto wrong = poly2(K, {{0, 2, 1}, {4, 0, 1}});
    CHECK_THROWS_AS(buildCurve(K, {b1, b2}, {f1, f2}, wrong, 64), InputError);
  }

  TEST_CASE("three transverse lines: conductor with and without equations") {
    auto& K = Q();
    auto zero = TruncatedSeries();
    auto t = mono(K, 1, 1);
    auto b1 = branchOf({t, zero});  // y = 0
    auto b2 = branchOf({zero, t});  // x = 0
    auto b3 = branchOf({t, t});     // y = x
    auto f1 = poly2(K, {{0, 1, 1}});
    auto f2 = poly2(K, {{1, 0, 1}});
    auto f3 = poly2(K, {{0, 1, 1}, {1, 0, -1}});
    std::set<IVec> expectBox{{0, 0, 0}, {1, 1, 1}, {1, 1, 2},
                             {1, 2, 1}, {2, 1, 1}, {2, 2, 2}};

    auto C = buildCurve(K, {b1, b2, b3}, {f1, f2, f3}, {}, 64);
    CHECK(C.gamma == IVec{2, 2, 2});
    CHECK(C.delta == 3);
    CHECK(C.mu == 4);
    CHECK(C.valO.box == expectBox);

    // same answers through the direct search (no equations supplied)
    auto D = buildCurve(K, {b1, b2, b3}, {}, {}, 64);
    CHECK(D.gamma == IVec{2, 2, 2});
    CHECK(D.delta == 3);
    CHECK(D.valO.box == expectBox);
  }

  TEST_CASE("coordinate axes in three-space") {
    auto& K = Q();
    auto zero = TruncatedSeries();
    auto t = mono(K, 1, 1);
    auto C = buildCurve(K,
                        {branchOf({t, zero, zero}), branchOf({zero, t, zero}),
                         branchOf({zero, zero, t})},
                        {}, {}, 64);
    CHECK(C.m == 3);
    CHECK(C.gamma == IVec{1, 1, 1});
    CHECK(C.delta == 2);
    CHECK(C.mu == 2);
    CHECK(C.valO.box == std::set<IVec>{{0, 0, 0}, {1, 1, 1}});
  }

  TEST_CASE("cusp and a transverse-ish smooth branch") {
    auto& K = Q();
    auto b1 = branchOf({mono(K, 1, 2), mono(K, 1, 3)});  // cusp branch
    auto b2 = branchOf({mono(K, 1, 1), TruncatedSeries()});  // the x-axis
    auto f1 = poly2(K, {{0, 2, 1}, {3, 0, -1}});  // y^2 - x^3
    auto f2 = poly2(K, {{0, 1, 1}});              // y
    auto C = buildCurve(K, {b1, b2}, {f1, f2}, {}, 64);
    // val_2(f_1) = ord(-t^3) = 3, val_1(f_2) = ord(t^3) = 3
    CHECK(C.gamma == IVec{5, 3});
    CHECK(C.delta == 4);  // 1 + 0 + intersection 3
    CHECK(C.mu == 7);
  }

  TEST_CASE("hensel lift: declared terms must be consistent") {
    auto& K = Q();
    auto f = poly2(K, {{0, 2, 1}, {3, 0, -1}});  // y^2 - x^3
    BranchSeed s;
    s.coordTerms.resize(2);
    s.coordTerms[0][2] = K.one();
    s.coordTerms[1][3] = K.one();
    s.coordTerms[1][5] = K.one();  // bogus extra term
    s.liftCoord = 1;
    CHECK_THROWS_AS(henselLiftBranch(K, f, s, 40), InputError);
    s.coordTerms[1].erase(5);
    auto br = henselLiftBranch(K, f, s, 40);
    CHECK(br.mult == 2);
    CHECK(!f.evalSeries(K, br.coords).order(K).has_value());
  }

  TEST_CASE("truncation complaints carry a retry hint") {
    auto& K = Q();
    // visible data too short for the working precision 2*gamma + slack
    TruncatedSeries x(2, 7, {K.one()});
    TruncatedSeries y(3, 7, {K.one()});
    try {
      buildCurve(K, {branchOf({x, y})}, {}, {}, 64);
      CHECK(false);
    } catch (const RaiseTruncation& e) {
      CHECK(e.needed > 7);
    }
  }

  TEST_CASE("input validation") {
    auto& K = Q();
    // not primitive: (t^2, t^4)
    CHECK_THROWS_AS(buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 4)})}, {}, {}, 64),
                    InputError);
    // coincident branches
    auto b = branchOf({mono(K, 1, 1), mono(K, 1, 2)});
    CHECK_THROWS_AS(buildCurve(K, {b, b}, {}, {}, 64), InputError);
    // does not pass through the origin
    CHECK_THROWS_AS(buildCurve(K, {branchOf({mono(K, 1, 0), mono(K, 1, 2)})}, {}, {}, 64),
                    InputError);
  }

  TEST_CASE("single-branch subcurves") {
    auto& K = Q();
    auto b1 = branchOf({mono(K, 1, 1), mono(K, 1, 2)});
    auto b2 = branchOf({mono(K, 1, 1), mono(K, -1, 2)});
    auto f1 = poly2(K, {{0, 1, 1}, {2, 0, -1}});
    auto f2 = poly2(K, {{0, 1, 1}, {2, 0, 1}});
    auto C = buildCurve(K, {b1, b2}, {f1, f2}, {}, 64);
    auto B0 = C.branchCurve(0);
    CHECK(B0.p == 1);
    CHECK(B0.gamma == IVec{0});  // a smooth branch
    CHECK(B0.delta == 0);
    CHECK(B0.branchEquations.size() == 1);
  }
}
