#include "doctest.h"
#include "logres/strata.hpp"

using namespace logres;

namespace {
Field& Q() {
  static Field K(FieldSpec::rationals());
  return K;
}

Polynomial poly2(const Field& K, std::vector<std::tuple<int, int, int>> terms) {
  Polynomial f = Polynomial::zero(2);
  for (auto& [i, j, c] : terms) f.addTerm(K, {i, j}, K.fromInt(c));
  return f;
}

// x^5 - y^6 + s1 x^2 y^4 + s2 x^3 y^3 + s3 x^3 y^4
DeformationFamily familyA() {
  auto& K = Q();
  return makeFamily(K, poly2(K, {{5, 0, 1}, {0, 6, -1}}),
                    {{2, 4}, {3, 3}, {3, 4}});
}

// x^10 + y^8 + s1 x^5 y^4 + s2 x^3 y^6
DeformationFamily familyB() {
  auto& K = Q();
  return makeFamily(K, poly2(K, {{10, 0, 1}, {0, 8, 1}}), {{5, 4}, {3, 6}});
}

std::vector<FieldElem> at(std::vector<int> vs) {
  auto& K = Q();
  std::vector<FieldElem> out;
  for (int v : vs) out.push_back(K.fromInt(v));
  return out;
}

std::vector<IVec> rows1(std::vector<int> vs) {
  std::vector<IVec> out;
  for (int v : vs) out.push_back({v});
  return out;
}
}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("family evaluation substitutes parameters exactly") {
    auto& K = Q();
    DeformationFamily F = familyA();
    Polynomial base = poly2(K, {{5, 0, 1}, {0, 6, -1}});
    CHECK(evaluateFamily(F, at({0, 0, 0})).terms == base.terms);
    Polynomial p3 = evaluateFamily(F, at({0, 0, 1}));
    CHECK(p3.terms == poly2(K, {{5, 0, 1}, {0, 6, -1}, {3, 4, 1}}).terms);
    Polynomial pb = evaluateFamily(familyB(), at({1, 0}));
    CHECK(pb.terms == poly2(K, {{10, 0, 1}, {0, 8, 1}, {5, 4, 1}}).terms);
    CHECK_THROWS_AS(evaluateFamily(F, at({1, 2})), InputError);
  }

  TEST_CASE("low-weight deformation monomials are rejected") {
    auto& K = Q();
    Polynomial base = poly2(K, {{5, 0, 1}, {0, 6, -1}});
    // 2*6 + 3*5 = 27 < 30
    CHECK_THROWS_AS(makeFamily(K, base, {{2, 3}}), InputError);
    // weight exactly 30 is not allowed either
    CHECK_THROWS_AS(makeFamily(K, base, {{0, 6}}), InputError);
    CHECK_NOTHROW(makeFamily(K, base, {{1, 5}}));  // 6 + 25 = 31 > 30
    // the weight gate only applies to two-term quasihomogeneous bases
    CHECK_NOTHROW(makeFamily(K, poly2(K, {{10, 0, 1}, {0, 8, 1}}), {{5, 4}}));
  }

  TEST_CASE("single samples carry the full invariant record") {
    DeformationFamily F = familyA();
    SampleRecord r = analyzeSample(F, at({0, 0, 0}));
    CHECK(r.parametrized);
    CHECK(r.tjurinaDirect == 20);
    CHECK(r.tjurinaViaValues == 20);
    CHECK(r.delta == 10);
    CHECK(r.mu == 20);
    CHECK(r.mult == 5);
    CHECK(r.dimROverNormalization == 10);
    CHECK(r.quasihomogeneous);
    CHECK(r.negatives == rows1({-19, -14, -13, -9, -8, -7, -4, -3, -2, -1}));

    r = analyzeSample(F, at({0, 0, 1}));
    CHECK(r.parametrized);
    CHECK(r.tjurinaDirect == 19);
    CHECK(r.tjurinaViaValues == 19);
    CHECK(r.delta == 10);
    CHECK(r.mu == 20);
    CHECK(r.dimROverNormalization == 9);
    CHECK_FALSE(r.quasihomogeneous);
    CHECK(r.negatives == rows1({-14, -13, -9, -8, -7, -4, -3, -2, -1}));
  }

  TEST_CASE("the four-sample scan reproduces the published strata") {
    DeformationFamily F = familyA();
    StrataReport rep = scanStrata(
        F, {at({0, 0, 0}), at({0, 0, 1}), at({1, 0, 0}), at({0, 1, 0})});
    REQUIRE(rep.samples.size() == 4);
    CHECK(rep.samples[0].dimROverNormalization == 10);
    CHECK(rep.samples[1].dimROverNormalization == 9);
    CHECK(rep.samples[2].dimROverNormalization == 8);
    CHECK(rep.samples[3].dimROverNormalization == 8);

    REQUIRE(rep.strata.size() == 4);
    CHECK(rep.strata[0].tjurina == 20);
    CHECK(rep.strata[0].negatives ==
          rows1({-19, -14, -13, -9, -8, -7, -4, -3, -2, -1}));
    CHECK(rep.strata[1].tjurina == 19);
    CHECK(rep.strata[1].negatives ==
          rows1({-14, -13, -9, -8, -7, -4, -3, -2, -1}));
    CHECK(rep.strata[2].tjurina == 18);
    CHECK(rep.strata[2].negatives == rows1({-14, -9, -8, -7, -4, -3, -2, -1}));
    CHECK(rep.strata[3].tjurina == 18);
    CHECK(rep.strata[3].negatives == rows1({-13, -9, -8, -7, -4, -3, -2, -1}));
    // the two tjurina-18 samples land in different residue strata
    CHECK(rep.strata[2].members == std::vector<int>{2});
    CHECK(rep.strata[3].members == std::vector<int>{3});
    bool split = false;
    for (auto& f : rep.flags)
      if (f.find("splits into 2") != std::string::npos) split = true;
    CHECK(split);
    // everything else is quiet
    CHECK(rep.flags.size() == 1);
  }

  TEST_CASE("weight-equal fibers fall back to Tjurina-only records") {
    DeformationFamily F = familyB();
    StrataReport rep = scanStrata(F, {at({1, 0}), at({0, 1}), at({1, 1})});
    REQUIRE(rep.samples.size() == 3);
    CHECK(rep.samples[0].tjurinaDirect == 63);
    CHECK(rep.samples[1].tjurinaDirect == 54);
    CHECK(rep.samples[2].tjurinaDirect == 53);
    for (auto& s : rep.samples) {
      CHECK_FALSE(s.parametrized);
      CHECK(s.note.find("no parametrization") == 0);
    }
    REQUIRE(rep.strata.size() == 3);
    CHECK(rep.strata[0].tjurina == 63);
    CHECK(rep.strata[1].tjurina == 54);
    CHECK(rep.strata[2].tjurina == 53);
    CHECK(rep.strata[0].dimROverNormalization == -1);
    CHECK(rep.flags.empty());
  }

  TEST_CASE("a constant family gives a single stratum") {
    auto& K = Q();
    DeformationFamily F = makeFamily(K, poly2(K, {{3, 0, 1}, {0, 2, -1}}), {});
    StrataReport rep = scanStrata(F, {at({}), at({})});
    CHECK(rep.samples.size() == 2);
    REQUIRE(rep.strata.size() == 1);
    CHECK(rep.strata[0].tjurina == 2);
    CHECK(rep.strata[0].negatives == rows1({-1}));
    CHECK(rep.strata[0].members == std::vector<int>{0, 1});
    CHECK(rep.flags.empty());
  }

  TEST_CASE("parallel scans produce the sequential result") {
    DeformationFamily F = familyA();
    std::vector<std::vector<FieldElem>> pts = {at({0, 0, 0}), at({0, 0, 1}),
                                               at({1, 0, 0}), at({0, 1, 0})};
    StrataReport seq = scanStrata(F, pts, 0, 1);
    StrataReport par = scanStrata(F, pts, 0, 4);
    REQUIRE(seq.strata.size() == par.strata.size());
    for (size_t i = 0; i < seq.strata.size(); ++i) {
      CHECK(seq.strata[i].tjurina == par.strata[i].tjurina);
      CHECK(seq.strata[i].negatives == par.strata[i].negatives);
      CHECK(seq.strata[i].members == par.strata[i].members);
    }
    CHECK(seq.flags == par.flags);
  }
}
