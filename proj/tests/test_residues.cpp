#include "doctest.h"
#include "logres/localalg.hpp"
#include "logres/residues.hpp"

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

Curve cusp() {
  auto& K = Q();
  return buildCurve(K, {branchOf({mono(K, 1, 2), mono(K, 1, 3)})}, {},
                    poly2(K, {{3, 0, 1}, {0, 2, -1}}), 64);
}

Curve tacnode() {
  auto& K = Q();
  return buildCurve(K,
                    {branchOf({mono(K, 1, 1), mono(K, 1, 2)}),
                     branchOf({mono(K, 1, 1), mono(K, -1, 2)})},
                    {poly2(K, {{0, 1, 1}, {2, 0, -1}}), poly2(K, {{0, 1, 1}, {2, 0, 1}})},
                    std::nullopt, 64);
}

Curve node() {
  auto& K = Q();
  return buildCurve(K,
                    {branchOf({mono(K, 1, 1), TruncatedSeries()}),
                     branchOf({TruncatedSeries(), mono(K, 1, 1)})},
                    {poly2(K, {{0, 1, 1}}), poly2(K, {{1, 0, 1}})}, std::nullopt, 64);
}

Curve cuspAndLine() {
  auto& K = Q();
  return buildCurve(K,
                    {branchOf({mono(K, 1, 2), mono(K, 1, 3)}),
                     branchOf({mono(K, 1, 1), TruncatedSeries()})},
                    {poly2(K, {{3, 0, 1}, {0, 2, -1}}), poly2(K, {{0, 1, 1}})},
                    std::nullopt, 64);
}

// x^5 - y^6, parametrized by (t^6, t^5): semigroup <5,6>, conductor 20.
Curve sqh56() {
  auto& K = Q();
  return buildCurve(K, {branchOf({mono(K, 1, 6), mono(K, 1, 5)})}, {},
                    poly2(K, {{5, 0, 1}, {0, 6, -1}}), 64);
}

// x^5 - y^6 + x^3 y^4: same topology, but no longer quasihomogeneous.
Curve sqh56p() {
  auto& K = Q();
  Polynomial f = poly2(K, {{5, 0, 1}, {0, 6, -1}, {3, 4, 1}});
  auto b = sqhParametrize(K, f, 64);
  REQUIRE(b.has_value());
  return buildCurve(K, {*b}, {}, f, 64);
}

// the space curve (t^3, t^4, t^5): semigroup <3,4,5>, not symmetric.
Curve space345() {
  auto& K = Q();
  return buildCurve(K, {branchOf({mono(K, 1, 3), mono(K, 1, 4), mono(K, 1, 5)})},
                    {}, std::nullopt, 64);
}

std::vector<IVec> rows1(std::vector<int> vs) {
  std::vector<IVec> out;
  for (int v : vs) out.push_back({v});
  return out;
}
}  // namespace

TEST_SUITE("residues") {
  TEST_CASE("Kähler and Jacobian values on the cusp") {
    Curve C = cusp();
    ValueSet k = kahlerValues(C);
    CHECK(k.member({2}));
    CHECK(k.member({3}));
    CHECK_FALSE(k.member({1}));
    ValueSet J = jacobianValues(C);
    CHECK(J.lam == IVec{3});
    CHECK(J.member({3}));
    CHECK(J.member({4}));
    CHECK(J.member({5}));
    CHECK_FALSE(J.member({2}));
  }

  TEST_CASE("partial derivative values match gamma + coordinate value - 1") {
    Curve C = cusp();
    PartialValueIdentities r = partialValueIdentities(C);
    CHECK(r.fx.v[0] == 4);
    CHECK(r.fy.v[0] == 3);

    Curve L = cuspAndLine();
    r = partialValueIdentities(L);
    CHECK(r.fx.v[0] == 7);
    CHECK_FALSE(r.fx.v[1].has_value());
    CHECK(r.fy.v[0] == 6);
    CHECK(r.fy.v[1] == 3);

    Curve N = node();
    r = partialValueIdentities(N);
    CHECK_FALSE(r.fx.v[0].has_value());
    CHECK(r.fx.v[1] == 1);
    CHECK(r.fy.v[0] == 1);
    CHECK_FALSE(r.fy.v[1].has_value());

    CHECK_THROWS_AS(partialValueIdentities(space345()), InputError);
  }

  TEST_CASE("negative residue values of the standard fixtures") {
    CHECK(nonPositiveValues(residueValues(cusp())) == rows1({-1}));
    CHECK(nonPositiveValues(residueValues(tacnode())) ==
          std::vector<IVec>{IVec{-1, -1}});
    Curve N = node();
    CHECK(nonPositiveValues(residueValues(N)).empty());
    CHECK(sameMembership(residueValues(N), normalizationValueSet(2)));
  }

  TEST_CASE("negative residue values of x^5 - y^6 and its perturbation") {
    CHECK(nonPositiveValues(residueValues(sqh56())) ==
          rows1({-19, -14, -13, -9, -8, -7, -4, -3, -2, -1}));
    CHECK(nonPositiveValues(residueValues(sqh56p())) ==
          rows1({-14, -13, -9, -8, -7, -4, -3, -2, -1}));
  }

  TEST_CASE("semigroup symmetry characterizes Gorenstein rings") {
    CHECK(semigroupSymmetric(cusp()));
    CHECK(semigroupSymmetric(tacnode()));
    CHECK(semigroupSymmetric(node()));
    CHECK(semigroupSymmetric(cuspAndLine()));
    CHECK(semigroupSymmetric(sqh56()));
    CHECK_FALSE(semigroupSymmetric(space345()));
  }

  TEST_CASE("Tjurina numbers from values match the direct computation") {
    auto& K = Q();
    auto check = [&](const Curve& C, int expected) {
      CHECK(tjurinaViaValues(C) == expected);
      REQUIRE(C.planeEquation.has_value());
      CHECK(tjurinaDirect(K, *C.planeEquation) == expected);
    };
    check(cusp(), 2);
    check(tacnode(), 3);
    check(node(), 1);
    check(sqh56(), 20);
    check(sqh56p(), 19);
    Curve L = cuspAndLine();
    CHECK(tjurinaViaValues(L) == tjurinaDirect(K, *L.planeEquation));
  }

  TEST_CASE("dimension counts around the residue module") {
    Curve C = cusp();
    ResidueDimensions d = residueDimensions(C);
    CHECK(d.overRing == 2);
    CHECK(d.overNormalization == 1);
    CHECK(d.normalizationOverRing == 1);
    Curve T = tacnode();
    d = residueDimensions(T);
    CHECK(d.overRing == 3);
    CHECK(d.overNormalization == 1);
    CHECK(d.normalizationOverRing == 2);
  }

  TEST_CASE("quasihomogeneous Jacobian criterion") {
    CHECK(quasihomogeneousJacobianCheck(cusp()));
    CHECK(quasihomogeneousJacobianCheck(node()));
    CHECK(quasihomogeneousJacobianCheck(tacnode()));
    CHECK(quasihomogeneousJacobianCheck(sqh56()));
    CHECK_FALSE(quasihomogeneousJacobianCheck(sqh56p()));
  }

  TEST_CASE("branch residue values embed into the curve's residue values") {
    CHECK_NOTHROW(branchResidueInclusionCheck(tacnode()));
    CHECK_NOTHROW(branchResidueInclusionCheck(node()));
    CHECK_NOTHROW(branchResidueInclusionCheck(cuspAndLine()));
  }

  TEST_CASE("Milnor numbers: formula and direct computation agree") {
    auto& K = Q();
    for (Curve C : {cusp(), tacnode(), node(), sqh56(), sqh56p()}) {
      CHECK(C.mu == 2 * C.delta - C.p + 1);
      CHECK(C.mu == milnorDirect(K, *C.planeEquation));
    }
  }
}
