#include "logres/residues.hpp"

#include <algorithm>
#include <string>

#include "logres/errors.hpp"

namespace logres {

ValueSet kahlerValues(const Curve& C) {
  FractionalIdeal kah = idealPreset(C, "kahler");
  return shiftValueSet(idealValues(kah), ivConst(C.p, 1));
}

ValueSet jacobianValues(const Curve& C) {
  FractionalIdeal J = idealPreset(C, "jacobian");
  ValueSet vals = idealValues(J);
  IVec expect = ivSub(ivAdd(C.gamma, C.multiplicities()), ivConst(C.p, 1));
  if (vals.lam != expect)
    throw InvariantViolation(
        "the smallest Jacobian values differ from gamma + multiplicity - 1");
  if (C.m == 2 && C.planeEquation) {
    FractionalIdeal kah = idealPreset(C, "kahler");
    ValueSet shifted = shiftValueSet(idealValues(kah), C.gamma);
    if (!sameMembership(vals, shifted))
      throw InvariantViolation(
          "the Jacobian values differ from the conductor shift of the Kähler values");
  }
  return vals;
}

bool semigroupSymmetric(const Curve& C) {
  return sameMembership(C.valO.dualBySymmetry(C.gamma), C.valO);
}

ValueSet residueValues(const Curve& C) {
  FractionalIdeal R = idealPreset(C, "residues");
  ValueSet vals = idealValues(R);
  if (semigroupSymmetric(C)) {
    FractionalIdeal J = idealPreset(C, "jacobian");
    ValueSet sym = dualValuesSymmetry(J);
    if (!sameMembership(vals, sym))
      throw InvariantViolation(
          "the direct dual of the Jacobian ideal differs from its symmetry "
          "dual although the value semigroup is symmetric");
    // Independent recheck: v is a residue value exactly when no differential
    // value sits on the boundary lattice Delta(-v) of the Kähler values.
    ValueSet omega = kahlerValues(C);
    IVec one = ivConst(C.p, 1);
    IVec zero = ivConst(C.p, 0);
    forBox(ivSub(vals.lam, one), ivAdd(vals.nu, one), [&](const IVec& v) {
      bool viaOmega = !omega.deltaNonempty(ivSub(zero, v));
      if (vals.member(v) != viaOmega)
        throw InvariantViolation(
            "the residue values disagree with the boundary criterion on the "
            "differential values");
    });
  }
  return vals;
}

PartialValueIdentities partialValueIdentities(const Curve& C) {
  if (C.m != 2 || !C.planeEquation)
    throw InputError(
        "the partial derivative identities need a plane curve with an equation");
  const Field& K = C.K;
  auto evalAll = [&](const Polynomial& g) {
    SeriesVector out;
    out.comp.reserve(C.p);
    for (int j = 0; j < C.p; ++j)
      out.comp.push_back(g.evalSeries(K, C.branches[j].coords));
    return out;
  };
  PartialValueIdentities r;
  r.fx = svVal(K, evalAll(C.planeEquation->diff(K, 0)), C.safeBounds());
  r.fy = svVal(K, evalAll(C.planeEquation->diff(K, 1)), C.safeBounds());
  MultiVal vx = svVal(K, C.coordFunction(0), C.safeBounds());
  MultiVal vy = svVal(K, C.coordFunction(1), C.safeBounds());
  for (int j = 0; j < C.p; ++j) {
    auto expect = [&](const std::optional<int>& coordVal) -> std::optional<int> {
      if (!coordVal) return std::nullopt;
      return C.gamma[j] + *coordVal - 1;
    };
    if (r.fx.v[j] != expect(vy.v[j]) || r.fy.v[j] != expect(vx.v[j]))
      throw InvariantViolation(
          "a partial derivative value differs from gamma + coordinate value "
          "- 1 on branch " +
          std::to_string(j));
  }
  return r;
}

ResidueDimensions residueDimensions(const Curve& C) {
  ValueSet r = residueValues(C);
  ValueSet tilde = normalizationValueSet(C.p);
  ResidueDimensions d;
  d.overNormalization = dimBetween(r, tilde);
  d.normalizationOverRing = dimBetween(tilde, C.valO);
  if (d.normalizationOverRing != C.delta)
    throw InvariantViolation(
        "dim(normalization / ring) recomputed from the value sets differs "
        "from delta");
  d.overRing = dimBetween(r, C.valO);
  if (d.overRing != d.overNormalization + d.normalizationOverRing)
    throw InvariantViolation("the residue dimension counts are not additive");
  return d;
}

int tjurinaViaValues(const Curve& C) {
  return C.delta + residueDimensions(C).overNormalization;
}

bool quasihomogeneousJacobianCheck(const Curve& C) {
  ValueSet J = jacobianValues(C);
  const ValueSet& O = C.valO;
  IVec zero = ivConst(C.p, 0), one = ivConst(C.p, 1);
  IVec shift = ivSub(C.gamma, one);
  IVec lo = ivMin(J.lam, ivAdd(shift, O.lam));
  IVec hi = ivMax(ivMax(J.nu, ivAdd(shift, O.nu)), ivAdd(shift, one));
  bool ok = true;
  forBox(lo, hi, [&](const IVec& v) {
    if (!ok) return;
    IVec w = ivSub(v, shift);
    bool target = O.member(w) && w != zero;
    if (J.member(v) != target) ok = false;
  });
  return ok;
}

void branchResidueInclusionCheck(const Curve& C) {
  ValueSet r = residueValues(C);
  std::vector<ValueSet> br;
  br.reserve(C.p);
  for (int j = 0; j < C.p; ++j) br.push_back(residueValues(C.branchCurve(j)));
  IVec lo = r.lam, hi = r.nu;
  for (int j = 0; j < C.p; ++j) {
    lo[j] = std::min(lo[j], br[j].lam[0]);
    hi[j] = std::max(hi[j], br[j].nu[0]);
  }
  forBox(lo, hi, [&](const IVec& v) {
    for (int j = 0; j < C.p; ++j)
      if (!br[j].member({v[j]})) return;
    if (!r.member(v))
      throw InvariantViolation(
          "a vector of branch residue values is not a residue value of the "
          "whole curve");
  });
}

std::vector<IVec> nonPositiveValues(const ValueSet& s) {
  std::vector<IVec> out;
  for (int i = 0; i < s.p; ++i)
    if (s.lam[i] > 0) return out;
  IVec zero = ivConst(s.p, 0);
  forBox(s.lam, ivMin(zero, s.nu), [&](const IVec& v) {
    if (v != zero && s.member(v)) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace logres
