#pragma once
#include <map>
#include <string>
#include <vector>

#include "logres/series.hpp"

namespace logres {

// sparse polynomial in nvars variables over K
struct Polynomial {
  int nvars = 0;
  std::map<std::vector<int>, FieldElem> terms;  // exponent vector -> nonzero coefficient

  static Polynomial zero(int nvars) { return Polynomial{nvars, {}}; }
  bool isZero() const { return terms.empty(); }

  void addTerm(const Field& K, const std::vector<int>& exps, const FieldElem& c);
  Polynomial diff(const Field& K, int var) const;
  int minTotalDegree() const;  // order at the origin; large value for 0
  int maxDegree(int var) const;

  // substitute t-series for the variables
  TruncatedSeries evalSeries(const Field& K, const std::vector<TruncatedSeries>& xs) const;
  // evaluate at field constants
  FieldElem evalConst(const Field& K, const std::vector<FieldElem>& xs) const;

  std::string str(const Field& K, const std::vector<std::string>& varNames) const;
};

Polynomial polyAdd(const Field& K, const Polynomial& a, const Polynomial& b);
Polynomial polyScale(const Field& K, const Polynomial& a, const FieldElem& c);

}  // namespace logres
