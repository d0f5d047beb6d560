#pragma once

#include <logres/curve.hpp>
#include <logres/ideal.hpp>
#include <logres/lattice.hpp>

#include <vector>

namespace logres {

// Values of the module of Kähler differentials (modulo torsion) inside the
// meromorphic differentials of the normalization.  A differential g dt on a
// branch has value ord(g) + 1, so that d(t^n) has value n.
ValueSet kahlerValues(const Curve& C);

// Values of the Jacobian ideal.  For a plane curve with an equation this is
// computed from the partial derivatives and cross-checked against the shift
// of the Kähler values by the conductor exponent; for a space curve the
// shift is the definition.  Also checks that the smallest value is
// gamma + multiplicity - 1 on every branch.
ValueSet jacobianValues(const Curve& C);

// Values of the module of logarithmic residues, computed as the dual of the
// Jacobian ideal.  On a curve with a symmetric value semigroup the result is
// cross-checked against the lattice-symmetry dual and against the Kähler
// values.  Throws InvariantViolation when the cross-checks disagree.
ValueSet residueValues(const Curve& C);

// Whether the value semigroup of the ring is symmetric about gamma - 1,
// which characterizes Gorenstein local rings.  Always true for plane curves.
bool semigroupSymmetric(const Curve& C);

// Branchwise values of the partial derivatives of a plane-curve equation,
// which must satisfy val(df/dx) = gamma + val(y) - 1 and
// val(df/dy) = gamma + val(x) - 1 on every branch (with infinity on branches
// where the coordinate vanishes identically).  Throws InvariantViolation
// when an identity fails and InputError when there is no plane equation.
struct PartialValueIdentities {
  MultiVal fx, fy;  // values of df/dx and df/dy on each branch
};
PartialValueIdentities partialValueIdentities(const Curve& C);

// Tjurina number obtained as delta + dim(R / normalization) where R is the
// module of logarithmic residues.
int tjurinaViaValues(const Curve& C);

// Dimension counts around the residue module R:
//   dim(R / ring) = tau, dim(R / normalization) = tau - delta,
//   dim(normalization / ring) = delta.
// The last one is recomputed from the value sets and checked against the
// curve's delta; a mismatch throws InvariantViolation.
struct ResidueDimensions {
  int overRing = 0;
  int overNormalization = 0;
  int normalizationOverRing = 0;
};
ResidueDimensions residueDimensions(const Curve& C);

// True when gamma - 1 + (ring values minus the zero vector) equals the
// Jacobian values; for a plane curve this characterizes quasihomogeneity
// (equivalently tau == mu).
bool quasihomogeneousJacobianCheck(const Curve& C);

// Checks that every vector whose j-th entry is a residue value of the j-th
// branch is a residue value of the whole curve.  Throws InvariantViolation
// with the offending vector when the inclusion fails.
void branchResidueInclusionCheck(const Curve& C);

// The members v <= 0 of a value set, excluding the zero vector, in
// lexicographic order.  Applied to residue values this is the data that
// distinguishes equisingularity strata.
std::vector<IVec> nonPositiveValues(const ValueSet& s);

}  // namespace logres
