#include "doctest.h"
#include "logres/linalg.hpp"

using namespace logres;

namespace {
Field& Q() {
  static Field K(FieldSpec::rationals());
  return K;
}

KVec row(const Field& K, std::vector<long> v) {
  KVec r;
  for (long x : v) r.push_back(K.fromInt(x));
  return r;
}
}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank") {
    auto& K = Q();
    CHECK(rankOf(K, {row(K, {1, 2, 3}), row(K, {2, 4, 6}), row(K, {0, 1, 1})}) == 2);
    CHECK(rankOf(K, {row(K, {1, 0}), row(K, {0, 1}), row(K, {5, 7})}) == 2);
    CHECK(rankOf(K, {row(K, {0, 0, 0})}) == 0);
  }

  TEST_CASE("echelon reduce and membership") {
    auto& K = Q();
    Echelon e(K, 3);
    CHECK(e.insert(row(K, {1, 2, 3})));
    CHECK(e.insert(row(K, {0, 1, 1})));
    CHECK(!e.insert(row(K, {1, 3, 4})));  // dependent
    KVec v = row(K, {2, 5, 7});
    CHECK(!e.reduceInPlace(v).has_value());  // in the span
    KVec w = row(K, {0, 0, 1});
    CHECK(e.reduceInPlace(w).value() == 2);
  }

  TEST_CASE("nullspace") {
    auto& K = Q();
    // x + y + z = 0, x - z = 0 -> kernel span {(1, -2, 1)}
    auto basis = nullspaceOf(K, {row(K, {1, 1, 1}), row(K, {1, 0, -1})}, 3);
    REQUIRE(basis.size() == 1);
    auto& x = basis[0];
    // check the two equations
    CHECK(K.isZero(K.add(K.add(x[0], x[1]), x[2])));
    CHECK(K.isZero(K.sub(x[0], x[2])));
    CHECK(!K.isZero(x[0]));
    // full-rank system has trivial kernel
    CHECK(nullspaceOf(K, {row(K, {1, 0}), row(K, {1, 1})}, 2).empty());
    // zero map: kernel is everything
    CHECK(nullspaceOf(K, {}, 4).size() == 4);
  }

  TEST_CASE("sparse echelon") {
    auto& K = Q();
    SparseEchelon se(K);
    using R = SparseEchelon::Row;
    CHECK(se.insert(R{{0, K.fromInt(2)}, {3, K.fromInt(1)}}));
    CHECK(se.insert(R{{1, K.fromInt(1)}}));
    // 2*first row reduces to zero
    CHECK(!se.insert(R{{0, K.fromInt(4)}, {3, K.fromInt(2)}}));
    // cascade: reduce against row 0 then land on a fresh pivot at 3...
    CHECK(se.insert(R{{0, K.fromInt(1)}, {3, K.fromInt(5)}}));
    CHECK(se.rank() == 3);
  }
}
