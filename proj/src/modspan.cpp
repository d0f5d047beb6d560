#include "logres/modspan.hpp"

#include <deque>
#include <functional>

#include "logres/errors.hpp"

namespace logres {

int Window::ncols() const {
  int n = 0;
  for (size_t j = 0; j < lo.size(); ++j) {
    if (hi[j] < lo[j]) throw InvariantViolation("empty window");
    n += hi[j] - lo[j] + 1;
  }
  return n;
}

int ModuleSpan::colIndex(int branch, int exp) const {
  if (exp < w_.lo[branch] || exp > w_.hi[branch])
    throw InvariantViolation("column outside window");
  return colBase_[branch] + (exp - w_.lo[branch]);
}

std::optional<KVec> ModuleSpan::clip(const SeriesVector& sv) const {
  const Field& K = *K_;
  if (sv.p() != w_.p()) throw InvariantViolation("branch count mismatch in clip");
  KVec row((size_t)ncols_, K.zero());
  bool any = false;
  for (int j = 0; j < w_.p(); ++j) {
    TruncatedSeries s = sv.comp[j];
    s.canonicalize(K);
    if (s.storedEmpty() || s.minExp() > w_.hi[j]) {
      // exact zeros on the whole window... unless the window outruns the
      // known coefficients of an all-zero stored part
      if (s.storedEmpty() && s.trunc() <= w_.hi[j])
        throw TruncationError("window coefficient beyond series truncation");
      continue;
    }
    if (s.minExp() < w_.lo[j] && s.order(K) && *s.order(K) < w_.lo[j])
      throw InvariantViolation("element has support below the window floor");
    if (s.trunc() <= w_.hi[j])
      throw TruncationError("window coefficient beyond series truncation");
    for (int e = std::max(s.minExp(), w_.lo[j]); e <= w_.hi[j]; ++e) {
      FieldElem c = s.at(K, e);
      if (!K.isZero(c)) {
        row[(size_t)colIndex(j, e)] = std::move(c);
        any = true;
      }
    }
  }
  if (!any) return std::nullopt;
  return row;
}

ModuleSpan::ModuleSpan(const Field& K, std::vector<SeriesVector> coordFns, Window w,
                       const std::vector<SeriesVector>& gens)
    : K_(&K), coordFns_(std::move(coordFns)), w_(std::move(w)), ncols_(0), basis_(K, w_.ncols()) {
  colBase_.resize(w_.p());
  for (int j = 0; j < w_.p(); ++j) {
    colBase_[j] = ncols_;
    ncols_ += w_.hi[j] - w_.lo[j] + 1;
  }
  for (auto& c : coordFns_) {
    for (int j = 0; j < w_.p(); ++j) {
      auto o = c.comp[j].order(K);
      if (o && *o <= 0)
        throw InvariantViolation("coordinate function must vanish at the origin");
    }
  }
  std::deque<SeriesVector> work(gens.begin(), gens.end());
  while (!work.empty()) {
    SeriesVector g = std::move(work.front());
    work.pop_front();
    // coefficients above the window never matter again: products only push
    // support upward, so cap every work item to keep the series small
    for (int j = 0; j < w_.p(); ++j)
      if (g.comp[j].trunc() > w_.hi[j] + 1)
        g.comp[j] = tsTruncate(K, g.comp[j], w_.hi[j] + 1);
    auto row = clip(g);
    if (!row) continue;
    if (basis_.insert(std::move(*row)))
      for (auto& c : coordFns_) work.push_back(svMulBranchwise(K, g, c));
  }
}

bool ModuleSpan::containsRow(KVec row) const {
  return !basis_.reduceInPlace(row).has_value();
}

KVec ModuleSpan::reduceRow(KVec row) const {
  basis_.reduceInPlace(row);
  return row;
}

bool ModuleSpan::contains(const SeriesVector& sv) const {
  auto row = clip(sv);
  if (!row) return true;
  return containsRow(std::move(*row));
}

RankTable::RankTable(const ModuleSpan& span) : span_(&span) {
  lo_ = span.window().lo;
  hi_ = span.window().hi;
  int p = span.window().p();
  dims_.resize(p);
  size_t total = 1;
  for (int j = 0; j < p; ++j) {
    dims_[j] = hi_[j] - lo_[j] + 2;  // from lo-1 to hi
    total *= (size_t)dims_[j];
  }
  table_.assign(total, -1);
  const Field& K = span.field();
  int d = span.dim();
  const auto& rows = span.rows();
  // walk the grid adding one column at a time; the column at (j,e) is the
  // d-vector of basis coefficients there
  IVec w(p);
  std::function<void(int, const Echelon&)> rec = [&](int j, const Echelon& parent) {
    Echelon basis = parent;
    for (int e = lo_[j] - 1; e <= hi_[j]; ++e) {
      if (e >= lo_[j]) {
        KVec col((size_t)d);
        int ci = span.colIndex(j, e);
        for (int r = 0; r < d; ++r) col[(size_t)r] = rows[(size_t)r][(size_t)ci];
        basis.insert(std::move(col));
      }
      w[j] = e;
      if (j + 1 < p)
        rec(j + 1, basis);
      else
        table_[flat(w)] = basis.rank();
    }
  };
  rec(0, Echelon(K, d));
}

size_t RankTable::flat(const IVec& w) const {
  size_t idx = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    int off = w[j] - (lo_[j] - 1);
    if (off < 0 || off >= dims_[j]) throw InvariantViolation("rank table index out of range");
    idx = idx * (size_t)dims_[j] + (size_t)off;
  }
  return idx;
}

int RankTable::at(const IVec& w) const { return table_[flat(w)]; }

std::set<IVec> memberPointsFromSpan(const ModuleSpan& span) {
  RankTable rt(span);
  const Window& w = span.window();
  std::set<IVec> pts;
  forBox(w.lo, w.hi, [&](const IVec& v) {
    IVec base = v;
    for (auto& x : base) x -= 1;
    int r0 = rt.at(base);
    for (int k = 0; k < w.p(); ++k) {
      IVec up = base;
      up[k] += 1;
      if (rt.at(up) <= r0) return;
    }
    pts.insert(v);
  });
  return pts;
}

ValueSet valueSetFromSpan(const ModuleSpan& span, const IVec& lam, const IVec& nu) {
  if (span.window().lo != lam || span.window().hi != nu)
    throw InvariantViolation("span window does not match the requested box");
  return makeValueSetFromBox(span.window().p(), lam, nu, memberPointsFromSpan(span));
}

}  // namespace logres
