#pragma once
#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

// Coefficient field K = Q[z]/(m(z)), m monic irreducible. m(z) = z encodes K = Q.
struct FieldSpec {
  std::vector<Rat> minPoly;  // c0, ..., cd with cd = 1
  int degree() const { return (int)minPoly.size() - 1; }
  static FieldSpec rationals() { return FieldSpec{{Rat(0), Rat(1)}}; }
  bool operator==(const FieldSpec& o) const { return minPoly == o.minPoly; }
};

// element = coefficient vector over the power basis 1, z, ..., z^{d-1}
using FieldElem = std::vector<Rat>;

class Field {
 public:
  explicit Field(FieldSpec spec);  // validates monicity and irreducibility (degree <= 4)

  const FieldSpec& spec() const { return spec_; }
  int deg() const { return d_; }

  FieldElem zero() const { return FieldElem(d_, Rat(0)); }
  FieldElem one() const;
  FieldElem fromRat(const Rat& r) const;
  FieldElem fromInt(long v) const { return fromRat(Rat(v)); }
  FieldElem gen() const;  // the class of z (= 0 when K = Q)

  bool isZero(const FieldElem& a) const;
  bool eq(const FieldElem& a, const FieldElem& b) const { return a == b; }

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem mulRat(const FieldElem& a, const Rat& c) const;
  FieldElem inv(const FieldElem& a) const;  // throws InputError on 0
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

  void addMulInPlace(FieldElem& acc, const FieldElem& a, const FieldElem& b) const;  // acc += a*b

  std::string str(const FieldElem& a) const;

 private:
  FieldSpec spec_;
  int d_;
  std::vector<std::vector<Rat>> zpow_;  // z^d, ..., z^{2d-2} reduced mod m
  void validateSpec() const;
};

// true iff the monic polynomial (c0..cd, cd=1) is irreducible over Q; supports d <= 4
bool isIrreducibleOverQ(const std::vector<Rat>& poly);

}  // namespace logres
