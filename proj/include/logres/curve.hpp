#pragma once
#include <map>
#include <optional>

#include "logres/errors.hpp"
#include "logres/modspan.hpp"
#include "logres/poly.hpp"

namespace logres {

// branch given by leading data to be completed against an equation
struct BranchSeed {
  std::vector<std::map<int, FieldElem>> coordTerms;  // declared exact terms per coordinate
  int liftCoord = -1;                                // -1 = choose automatically
};

struct BranchParam {
  std::vector<TruncatedSeries> coords;  // x_l(t) per ambient coordinate
  int mult = 0;                         // min finite order over the coordinates
};

struct CurveOptions {
  int slack = 8;  // extra precision required beyond 2 * max(gamma)
};

// thrown when the inputs do not carry enough coefficients; carries a
// sufficient truncation to retry with when the caller can re-lift
struct RaiseTruncation : TruncationError {
  int needed;
  explicit RaiseTruncation(const std::string& what, int needed_)
      : TruncationError(what), needed(needed_) {}
};

struct Curve {
  Field K;
  int m = 0;  // ambient coordinates
  int p = 0;  // branches
  int N = 0;  // requested working truncation
  std::vector<BranchParam> branches;
  std::vector<Polynomial> branchEquations;  // size p when given (plane only)
  std::optional<Polynomial> planeEquation;  // product of the branch equations

  std::vector<std::set<int>> branchSemigroup;  // semigroup values within [0, top_j]
  std::vector<int> semigroupWindowTop;
  std::vector<int> branchConductor;  // c_j
  // intersections[i][j] = val_j(f_i) for i != j; empty when no equations
  std::vector<IVec> intersections;
  IVec gamma;
  int delta = 0;
  int mu = 0;
  ValueSet valO;  // value set of O on the box [0, gamma]

  IVec multiplicities() const;
  // the l-th coordinate function restricted branchwise
  SeriesVector coordFunction(int l) const;
  std::vector<SeriesVector> coordFunctions() const;
  SeriesVector one() const;
  // per-branch safe bound for declaring a component infinite
  IVec safeBounds() const;
  // the curve consisting of branch j alone (carries its equation if known)
  Curve branchCurve(int j) const;
};

// complete a seed against f (vanishing to order N + ord(derivative))
BranchParam henselLiftBranch(const Field& K, const Polynomial& f, const BranchSeed& seed,
                             int N);

// recognize x^a - y^b + (higher weight) and parametrize it; nullopt when the
// shape does not match
std::optional<BranchParam> sqhParametrize(const Field& K, const Polynomial& f, int N);
struct SqhShape {
  int a, b;  // f = x^a - y^b + sum of s_ij x^i y^j with ib + ja > ab
};
std::optional<SqhShape> detectSqhShape(const Field& K, const Polynomial& f);

int intersectionMultiplicity(const Field& K, const Polynomial& f, const BranchParam& br);

Curve buildCurve(Field K, std::vector<BranchParam> branches,
                 std::vector<Polynomial> branchEquations,
                 std::optional<Polynomial> planeEquation, int N,
                 const CurveOptions& opt = {});

Polynomial polyMul(const Field& K, const Polynomial& a, const Polynomial& b);

}  // namespace logres
