#pragma once
#include <functional>
#include <set>
#include <vector>

#include "logres/series.hpp"

namespace logres {

// Value set of a fractional ideal, stored as the finite box [lam, nu] of
// members plus the box corners. Membership at arbitrary finite points is
// decided by clamping against nu (everything >= nu componentwise is a value,
// and v is a value iff v >= lam and min(v, nu) is).
struct ValueSet {
  int p = 0;
  IVec lam, nu;
  std::set<IVec> box;  // values v with lam <= v <= nu

  bool inBoxRange(const IVec& v) const;
  bool member(const IVec& v) const;

  // Lambda_i(w) = { alpha value : alpha_i = w_i, alpha_j >= w_j for j != i } nonempty?
  bool lambdaNonempty(int i, const IVec& w) const;
  // Delta_i(v): alpha_i = v_i, alpha_j > v_j
  bool deltaNonempty(int i, const IVec& v) const;
  bool deltaNonempty(const IVec& v) const;  // union over i

  // distance from lam to sup(v, lam) counting Lambda-nonempty steps:
  // the K-dimension of I / { g in I : val(g) >= v }
  int ell(const IVec& v) const;

  // number of i with Lambda_i(v + e_1 + ... + e_{i-1}) nonempty (a canonical
  // chain refinement; each value in [0, p])
  int cAt(const IVec& v) const;

  // value set of the dual ideal via the symmetry
  //   v value of dual <=> Delta(gamma - v - 1, this) empty
  ValueSet dualBySymmetry(const IVec& gamma) const;

  // membership for vectors with infinite components: replace each infinite
  // coordinate by nu_j and test (values of zero divisors arise this way)
  bool memberWithInf(const MultiVal& w) const;
  // all zero-divisor value patterns whose finite part lies in the box
  std::set<MultiVal> zeroDivisorValuesInBox() const;

  void validate() const;  // basic sanity: corners, closedness under min
};

ValueSet makeValueSetFromBox(int p, IVec lam, IVec nu, std::set<IVec> box);

// value set of the full local ring of the normalization (all of N^p)
ValueSet normalizationValueSet(int p);

// translate every value by k (the value set of t^k * I)
ValueSet shiftValueSet(const ValueSet& s, const IVec& k);

// package the values of the window { v : v <= 0 on every branch } into a
// ValueSet: v is a member iff min(v, 0) lies in the window set. Valid for
// modules containing the normalization, whose values include all of N^p.
ValueSet negativeWindowReconstruct(int p, const std::set<IVec>& window);

// equality of the memberships (compared over the union box and certified
// beyond it by the quadrant property)
bool sameMembership(const ValueSet& a, const ValueSet& b);

// dim_K (big / small) for nested value sets, computed as ell difference
int dimBetween(const ValueSet& big, const ValueSet& small);

IVec ivAdd(const IVec& a, const IVec& b);
IVec ivSub(const IVec& a, const IVec& b);
IVec ivMin(const IVec& a, const IVec& b);
IVec ivMax(const IVec& a, const IVec& b);
IVec ivConst(int p, int c);
bool ivLeq(const IVec& a, const IVec& b);

// iterate all lattice points of [lo, hi]; f called with each point
void forBox(const IVec& lo, const IVec& hi, const std::function<void(const IVec&)>& f);

}  // namespace logres
