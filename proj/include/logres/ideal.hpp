#pragma once
#include <optional>
#include <string>
#include <vector>

#include "logres/curve.hpp"

namespace logres {

// Fractional ideal of the curve's local ring O, given by finitely many
// generators inside the total ring of fractions: series vectors, possibly
// with negative exponents and with zero components (zero divisors).
//
// lam is the componentwise minimum of the generator values, so every value
// of the ideal is >= lam. nu is gamma + min val(g) over the generators g
// that are non zero divisors: g*O lies in the ideal and contains
// t^(val(g)) * t^gamma * O~, hence every v >= nu is a value.
struct FractionalIdeal {
  const Curve* C = nullptr;
  std::vector<SeriesVector> gens;
  std::vector<MultiVal> genVals;  // componentwise values of the generators
  IVec lam, nu;
  mutable std::optional<ValueSet> cache;  // filled by idealValues
};

// assemble and validate; at least one generator must be a non zero divisor
// (finite order on every branch)
FractionalIdeal makeIdeal(const Curve& C, std::vector<SeriesVector> gens);

// value set on [lam, nu] through the rank-jump membership criterion
// (recomputed from scratch)
ValueSet valueSetRankOracle(const FractionalIdeal& I);
// cached accessor for the same
const ValueSet& idealValues(const FractionalIdeal& I);
// the returned reference lives inside the ideal, so a temporary won't do
const ValueSet& idealValues(FractionalIdeal&&) = delete;

// dim_K I / { g in I : val(g) >= v }
int idealEll(const FractionalIdeal& I, const IVec& v);
// dim_K I_v / I_(v+1) = ell(v+1) - ell(v)
int idealCAt(const FractionalIdeal& I, const IVec& v);

// values of the dual ideal I^* = { h : h*I inside O }, read off from the
// value set of I alone: v is a value of I^* iff Delta(gamma - v - 1, val I)
// is empty
ValueSet dualValuesSymmetry(const FractionalIdeal& I);

// the dual ideal with explicit generators, by linear algebra on the window
// [gamma - nu, gamma - lam - 1]: I^* decomposes as the window solutions of
// "h * g_i lies in O for every i" plus t^(gamma-lam) * O~
FractionalIdeal dualDirect(const FractionalIdeal& I);

// single-branch value set by the closing procedure: insert generator values,
// multiply witnesses by the coordinate functions, and cancel leading terms
// whenever two elements share a value; complete on [lam, nu]
ValueSet valueAlgoP1(const FractionalIdeal& I);

// two-branch value set by the negative-window descent. Specific to the
// module of logarithmic residues: the generators must generate R_D (for
// example the output of dualDirect on the Jacobian ideal), since the descent
// consumes the residue values of the individual branches.
ValueSet valueAlgoP2(const FractionalIdeal& I);

// named ideals: "O_D" (the ring itself), "O_Dtilde" (normalization),
// "conductor", "kahler" (coordinate derivatives), "jacobian", "residues"
FractionalIdeal idealPreset(const Curve& C, const std::string& name);

// c * t_j^e on branch j, exact zero elsewhere
SeriesVector svMonomialAt(const Field& K, int p, int j, const FieldElem& c, int e);
// t^(e_j) on every branch j
SeriesVector svUnitMonomial(const Field& K, const IVec& e);

}  // namespace logres
