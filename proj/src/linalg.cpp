#include "logres/linalg.hpp"

#include "logres/errors.hpp"

namespace logres {

std::optional<int> Echelon::reduceInPlace(KVec& v) const {
  const Field& K = *K_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int pc = pivots_[r];
    if (!K.isZero(v[pc])) {
      FieldElem c = v[pc];
      for (int j = pc; j < ncols_; ++j)
        if (!K.isZero(rows_[r][j])) v[j] = K.sub(v[j], K.mul(c, rows_[r][j]));
    }
  }
  for (int j = 0; j < ncols_; ++j)
    if (!K.isZero(v[j])) return j;
  return std::nullopt;
}

bool Echelon::insert(KVec v) {
  const Field& K = *K_;
  if ((int)v.size() != ncols_) throw InvariantViolation("row width mismatch");
  auto piv = reduceInPlace(v);
  if (!piv) return false;
  int pc = *piv;
  FieldElem ip = K.inv(v[pc]);
  for (int j = pc; j < ncols_; ++j)
    if (!K.isZero(v[j])) v[j] = K.mul(v[j], ip);
  // back-substitute into existing rows so the basis stays fully reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (!K.isZero(rows_[r][pc])) {
      FieldElem c = rows_[r][pc];
      for (int j = pc; j < ncols_; ++j)
        if (!K.isZero(v[j])) rows_[r][j] = K.sub(rows_[r][j], K.mul(c, v[j]));
    }
  }
  // keep rows sorted by pivot
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pc);
  return true;
}

int rankOf(const Field& K, std::vector<KVec> rows) {
  if (rows.empty()) return 0;
  Echelon e(K, (int)rows[0].size());
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

std::vector<KVec> nullspaceOf(const Field& K, const std::vector<KVec>& rows, int ncols) {
  Echelon e(K, ncols);
  for (auto r : rows) e.insert(std::move(r));
  // free columns parameterize the kernel
  std::vector<bool> isPivot(ncols, false);
  for (int pc : e.pivots()) isPivot[pc] = true;
  std::vector<KVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (isPivot[f]) continue;
    KVec x(ncols, K.zero());
    x[f] = K.one();
    // each pivot row: x[pc] = -row[f] (rows are fully reduced, pivot = 1)
    for (size_t r = 0; r < e.rows().size(); ++r)
      x[e.pivots()[r]] = K.neg(e.rows()[r][f]);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool SparseEchelon::insert(Row r) {
  const Field& K = *K_;
  while (!r.empty()) {
    int lead = r.front().first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      // normalize pivot to 1
      FieldElem ip = K.inv(r.front().second);
      for (auto& [c, x] : r) x = K.mul(x, ip);
      rows_.emplace(lead, std::move(r));
      return true;
    }
    // r -= r.lead * rows_[lead]
    const Row& base = it->second;
    FieldElem c = r.front().second;
    Row out;
    out.reserve(r.size() + base.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < base.size()) {
      if (j >= base.size() || (i < r.size() && r[i].first < base[j].first)) {
        out.push_back(r[i++]);
      } else if (i >= r.size() || base[j].first < r[i].first) {
        out.emplace_back(base[j].first, K.neg(K.mul(c, base[j].second)));
        ++j;
      } else {
        FieldElem x = K.sub(r[i].second, K.mul(c, base[j].second));
        if (!K.isZero(x)) out.emplace_back(r[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    r = std::move(out);
  }
  return false;
}

}  // namespace logres
