#pragma once
#include <map>
#include <optional>
#include <vector>

#include "logres/field.hpp"

namespace logres {

using KVec = std::vector<FieldElem>;

// row space in echelon form over K; rows normalized to pivot 1, fully reduced
class Echelon {
 public:
  Echelon(const Field& K, int ncols) : K_(&K), ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return (int)rows_.size(); }
  const std::vector<KVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // reduce v against the basis in place; returns pivot column of the remainder
  std::optional<int> reduceInPlace(KVec& v) const;
  // reduce-and-insert; true if the rank grew
  bool insert(KVec v);

 private:
  const Field* K_;
  int ncols_;
  std::vector<KVec> rows_;
  std::vector<int> pivots_;  // pivot column of each row (increasing)
};

int rankOf(const Field& K, std::vector<KVec> rows);

// basis of { x : M x = 0 } (rows of M are the equations)
std::vector<KVec> nullspaceOf(const Field& K, const std::vector<KVec>& rows, int ncols);

// sparse row echelon keyed by leading (lowest-index) column; suited to
// staircase-shaped systems from monomial multiples
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& K) : K_(&K) {}
  using Row = std::vector<std::pair<int, FieldElem>>;  // sorted by column
  bool insert(Row r);  // true if rank grew
  int rank() const { return (int)rows_.size(); }

 private:
  const Field* K_;
  std::map<int, Row> rows_;  // leading column -> normalized row
};

}  // namespace logres
