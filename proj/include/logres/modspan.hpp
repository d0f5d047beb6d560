#pragma once
#include <optional>

#include "logres/lattice.hpp"
#include "logres/linalg.hpp"

namespace logres {

struct Window {
  IVec lo, hi;  // inclusive exponent range per branch
  int p() const { return (int)lo.size(); }
  int ncols() const;
};

// Echelon K-basis of (O * gens) mod t^(hi+1)*O~, where O is the subring
// generated by the given coordinate functions (each of strictly positive
// order on every branch). Elements are represented by their coefficient
// rows on the window [lo, hi]; generators must have no support below lo.
class ModuleSpan {
 public:
  ModuleSpan(const Field& K, std::vector<SeriesVector> coordFns, Window w,
             const std::vector<SeriesVector>& gens);

  const Field& field() const { return *K_; }
  const Window& window() const { return w_; }
  int dim() const { return basis_.rank(); }
  int ncols() const { return ncols_; }
  int colIndex(int branch, int exp) const;  // exp in [lo_j, hi_j]

  // coefficient row of sv on the window; nullopt if sv is zero there.
  // Throws TruncationError when a needed coefficient is unknown.
  std::optional<KVec> clip(const SeriesVector& sv) const;
  bool contains(const SeriesVector& sv) const;
  bool containsRow(KVec row) const;
  // remainder of a window row after reduction against the basis
  KVec reduceRow(KVec row) const;

  const std::vector<KVec>& rows() const { return basis_.rows(); }

 private:
  const Field* K_;
  std::vector<SeriesVector> coordFns_;
  Window w_;
  int ncols_;
  std::vector<int> colBase_;  // per branch offset into the flat row
  Echelon basis_;
};

// rank(A_w) for w in [lo-1, hi], where A_w is the matrix of window rows
// restricted to the columns with exponent <= w_j on branch j; this equals
// the colength of the elements with value >= w+1, so the rank-jump
// criterion reads membership of v from ranks at v-1 and v-1+e_k
class RankTable {
 public:
  explicit RankTable(const ModuleSpan& span);
  int at(const IVec& w) const;  // w in [lo-1, hi]

 private:
  const ModuleSpan* span_;
  IVec lo_, hi_, dims_;
  std::vector<int> table_;
  size_t flat(const IVec& w) const;
};

// membership table over the span window via the rank criterion:
// v is a value iff rank(A_{v-1+e_k}) > rank(A_{v-1}) for every k
std::set<IVec> memberPointsFromSpan(const ModuleSpan& span);

// package as a ValueSet; requires window == [lam, nu]
ValueSet valueSetFromSpan(const ModuleSpan& span, const IVec& lam, const IVec& nu);

}  // namespace logres
