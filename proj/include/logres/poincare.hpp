#pragma once

#include <map>
#include <string>

#include <logres/ideal.hpp>
#include <logres/lattice.hpp>

namespace logres {

// A Laurent polynomial in p variables with integer coefficients.  Zero
// coefficients are never stored.
struct LaurentPoly {
  int p = 0;
  std::map<IVec, int> terms;
  bool operator==(const LaurentPoly& o) const = default;
};

// Render a Laurent polynomial, e.g. "1 - t + t^2" or "-1 + t1*t2".
std::string lpStr(const LaurentPoly& P);

// The alternating difference of the counting function over all coordinate
// subsets:  alpha(v) = sum over J of (-1)^|J| c(v - e_J).
int alphaAt(const ValueSet& s, const IVec& v);

// The Poincaré polynomial  P(t) = sum of alpha(v) t^v.  Its support lies in
// the box [lam, nu]; that is asserted over a margin and a violation throws.
LaurentPoly poincarePoly(const ValueSet& s);

// Sum of all coefficients (the value at t = 1); telescoping makes it 1 for
// one branch and 0 otherwise.
int lpCoefficientSum(const LaurentPoly& P);

// Verifies the duality identity P_dual(t) = (-1)^(p+1) t^gamma P(1/t)
// between an ideal's Poincaré polynomial and its dual's, together with the
// pointwise identities c_dual(v) = p - c(gamma - v - 1) and
// alpha_dual(v) = (-1)^(p+1) alpha(gamma - v) across the window.
struct PoincareSymmetryReport {
  bool ok = true;
  std::string diff;  // first mismatch, empty when ok
  LaurentPoly poly, dualPoly;
};
PoincareSymmetryReport poincareSymmetryCheck(const FractionalIdeal& I);

}  // namespace logres
