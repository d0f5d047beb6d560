#pragma once

#include <optional>
#include <string>
#include <vector>

#include <logres/curve.hpp>
#include <logres/poly.hpp>

namespace logres {

// A deformation family F(x, y, s) = f(x, y) + sum of s_k * x^i y^j, one
// parameter per monomial.  Setting every parameter to zero recovers the base
// polynomial.  When the base has the two-term quasihomogeneous shape
// x^a - y^b (up to units), each deformation monomial must satisfy the weight
// condition i*b + j*a > a*b, which keeps the family equisingular.
struct DeformationFamily {
  Field K;
  Polynomial base;
  std::vector<std::vector<int>> monomials;  // exponent vectors, one parameter each
  std::optional<SqhShape> shape;            // set when the base is x^a - y^b shaped
};

DeformationFamily makeFamily(const Field& K, Polynomial base,
                             std::vector<std::vector<int>> monomials);

// Exact substitution of parameter values.
Polynomial evaluateFamily(const DeformationFamily& F,
                          const std::vector<FieldElem>& point);

// Everything recorded about one family fiber.  The Tjurina number is always
// computed directly from the local algebra; the value-theoretic data needs a
// parametrization of the fiber, which the built-in method provides for
// two-term quasihomogeneous shapes.  A caller-supplied branch seed overrides
// the built-in search.
struct SampleRecord {
  std::vector<FieldElem> point;
  int tjurinaDirect = 0;
  bool parametrized = false;
  std::string note;  // why the value pipeline did not run, when it did not

  // the rest is meaningful only when parametrized
  int delta = 0, mu = 0, mult = 0;
  int tjurinaViaValues = 0;
  int dimROverNormalization = 0;       // tau - delta
  std::vector<IVec> negatives;         // non-positive residue values, no zero
  bool quasihomogeneous = false;       // Jacobian-values criterion
};

SampleRecord analyzeSample(const DeformationFamily& F,
                           const std::vector<FieldElem>& point, int truncation = 0,
                           const BranchParam* seed = nullptr);

// Samples grouped by (tjurina, negative residue values).  Samples whose
// fiber could not be parametrized group by the Tjurina number alone and are
// marked accordingly.
struct StratumReport {
  int tjurina = 0;
  bool parametrized = false;
  std::vector<IVec> negatives;         // empty when not parametrized
  int dimROverNormalization = -1;      // -1 when not parametrized
  std::vector<int> members;            // indices into the sample list
};

struct StrataReport {
  std::vector<SampleRecord> samples;   // in input order
  std::vector<StratumReport> strata;   // tjurina descending, then negatives
  std::vector<std::string> flags;      // anomalies and noteworthy structure
};

StrataReport scanStrata(const DeformationFamily& F,
                        const std::vector<std::vector<FieldElem>>& points,
                        int truncation = 0, int threads = 1,
                        const std::map<int, BranchParam>* seeds = nullptr);

}  // namespace logres
