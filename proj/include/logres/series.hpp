#pragma once
#include <limits>
#include <optional>
#include <vector>

#include "logres/field.hpp"

namespace logres {

// Laurent series in t with coefficients in K, known exactly for exponents < trunc.
// trunc == EXACT marks an exact Laurent polynomial (known at every exponent).
class TruncatedSeries {
 public:
  static constexpr int EXACT = std::numeric_limits<int>::max() / 4;

  TruncatedSeries() = default;  // exact zero
  TruncatedSeries(int minExp, int trunc, std::vector<FieldElem> coef);

  static TruncatedSeries zeroKnownTo(int trunc);
  static TruncatedSeries monomial(const Field& K, FieldElem c, int exp, int trunc = EXACT);

  int minExp() const { return minExp_; }
  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ == EXACT; }
  bool storedEmpty() const { return coef_.empty(); }

  // coefficient of t^exp; requires exp < trunc
  FieldElem at(const Field& K, int exp) const;
  bool knownAt(int exp) const { return exp < trunc_; }

  // exponent of the lowest nonzero known coefficient; nullopt if zero up to trunc
  std::optional<int> order(const Field& K) const;

  // drop leading/trailing exact zeros so minExp points at a nonzero coefficient
  void canonicalize(const Field& K);

  const std::vector<FieldElem>& coef() const { return coef_; }

 private:
  int minExp_ = 0;
  int trunc_ = EXACT;
  std::vector<FieldElem> coef_;  // coef_[i] belongs to t^(minExp_+i)
};

TruncatedSeries tsAdd(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries tsSub(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries tsNeg(const Field& K, const TruncatedSeries& a);
TruncatedSeries tsMul(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries tsScale(const Field& K, const TruncatedSeries& a, const FieldElem& c);
TruncatedSeries tsShift(const TruncatedSeries& a, int k);  // multiply by t^k
TruncatedSeries tsDeriv(const Field& K, const TruncatedSeries& a);  // d/dt
// truncate knowledge to exponents < newTrunc (newTrunc <= trunc)
TruncatedSeries tsTruncate(const Field& K, const TruncatedSeries& a, int newTrunc);
// inverse of a series of finite order, known to exponent < targetTrunc when possible
TruncatedSeries tsInvert(const Field& K, const TruncatedSeries& a, int targetTrunc);
// integer power
TruncatedSeries tsPow(const Field& K, const TruncatedSeries& a, int n);

// vector of series, one component per branch
struct SeriesVector {
  std::vector<TruncatedSeries> comp;
  int p() const { return (int)comp.size(); }
};

SeriesVector svAdd(const Field& K, const SeriesVector& a, const SeriesVector& b);
SeriesVector svSub(const Field& K, const SeriesVector& a, const SeriesVector& b);
SeriesVector svScale(const Field& K, const SeriesVector& a, const FieldElem& c);
SeriesVector svShift(const SeriesVector& a, const std::vector<int>& k);
// componentwise product (multiplication by a ring element given branchwise)
SeriesVector svMulBranchwise(const Field& K, const SeriesVector& a, const SeriesVector& b);

using IVec = std::vector<int>;

// value vector with +infinity entries
struct MultiVal {
  std::vector<std::optional<int>> v;  // nullopt = +infinity
  int p() const { return (int)v.size(); }
  bool finite() const;
  IVec finitePart() const;  // requires finite()
  bool operator==(const MultiVal& o) const { return v == o.v; }
  bool operator<(const MultiVal& o) const;  // lex, infinity largest
  static MultiVal fromFinite(const IVec& w);
};

// componentwise valuation. A component that is zero up to its truncation is
// declared infinite if trunc > safeBound for that branch, otherwise the data
// cannot distinguish 0 from a tiny tail and we refuse.
MultiVal svVal(const Field& K, const SeriesVector& a, const IVec& safeBound);

std::string tsToString(const Field& K, const TruncatedSeries& a);

}  // namespace logres
