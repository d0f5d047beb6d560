#include "logres/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

namespace {
// add for truncation bookkeeping; EXACT is absorbing
int satAdd(int a, int b) {
  if (a >= TruncatedSeries::EXACT || b >= TruncatedSeries::EXACT)
    return TruncatedSeries::EXACT;
  long s = (long)a + (long)b;
  if (s >= TruncatedSeries::EXACT) return TruncatedSeries::EXACT;
  if (s <= -TruncatedSeries::EXACT) return -TruncatedSeries::EXACT;
  return (int)s;
}
}  // namespace

TruncatedSeries::TruncatedSeries(int minExp, int trunc, std::vector<FieldElem> coef)
    : minExp_(minExp), trunc_(trunc), coef_(std::move(coef)) {
  if (coef_.empty()) {
    minExp_ = trunc_ == EXACT ? 0 : trunc_;
    return;
  }
  if (trunc_ != EXACT && minExp_ + (int)coef_.size() > trunc_)
    throw InvariantViolation("series coefficients beyond truncation");
}

TruncatedSeries TruncatedSeries::zeroKnownTo(int trunc) {
  TruncatedSeries s;
  s.minExp_ = trunc == EXACT ? 0 : trunc;
  s.trunc_ = trunc;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Field& K, FieldElem c, int exp, int trunc) {
  TruncatedSeries s;
  s.trunc_ = trunc;
  if (K.isZero(c)) return zeroKnownTo(trunc);
  if (trunc != EXACT && exp >= trunc) return zeroKnownTo(trunc);
  s.minExp_ = exp;
  s.coef_.push_back(std::move(c));
  return s;
}

FieldElem TruncatedSeries::at(const Field& K, int exp) const {
  if (exp >= trunc_) throw TruncationError("coefficient beyond truncation requested");
  int i = exp - minExp_;
  if (i < 0 || i >= (int)coef_.size()) return K.zero();
  return coef_[i];
}

std::optional<int> TruncatedSeries::order(const Field& K) const {
  for (size_t i = 0; i < coef_.size(); ++i)
    if (!K.isZero(coef_[i])) return minExp_ + (int)i;
  return std::nullopt;
}

void TruncatedSeries::canonicalize(const Field& K) {
  size_t lo = 0;
  while (lo < coef_.size() && K.isZero(coef_[lo])) ++lo;
  size_t hi = coef_.size();
  while (hi > lo && K.isZero(coef_[hi - 1])) --hi;
  if (lo == hi) {
    coef_.clear();
    minExp_ = trunc_ == EXACT ? 0 : trunc_;
    return;
  }
  if (lo > 0 || hi < coef_.size()) {
    std::vector<FieldElem> nc(coef_.begin() + lo, coef_.begin() + hi);
    coef_ = std::move(nc);
    minExp_ += (int)lo;
  }
}

TruncatedSeries tsAdd(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b) {
  int trunc = std::min(a.trunc(), b.trunc());
  if (a.storedEmpty() && b.storedEmpty()) return TruncatedSeries::zeroKnownTo(trunc);
  int lo = std::min(a.storedEmpty() ? INT_MAX / 4 : a.minExp(),
                    b.storedEmpty() ? INT_MAX / 4 : b.minExp());
  int hi = std::min(trunc, std::max(a.storedEmpty() ? lo : a.minExp() + (int)a.coef().size(),
                                    b.storedEmpty() ? lo : b.minExp() + (int)b.coef().size()));
  if (hi <= lo) return TruncatedSeries::zeroKnownTo(trunc);
  std::vector<FieldElem> out;
  for (int e = lo; e < hi; ++e) out.push_back(K.add(a.at(K, e), b.at(K, e)));
  TruncatedSeries r(lo, trunc, std::move(out));
  r.canonicalize(K);
  return r;
}

TruncatedSeries tsNeg(const Field& K, const TruncatedSeries& a) {
  std::vector<FieldElem> out;
  out.reserve(a.coef().size());
  for (auto& c : a.coef()) out.push_back(K.neg(c));
  return TruncatedSeries(a.minExp(), a.trunc(), std::move(out));
}

TruncatedSeries tsSub(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b) {
  return tsAdd(K, a, tsNeg(K, b));
}

TruncatedSeries tsMul(const Field& K, const TruncatedSeries& a, const TruncatedSeries& b) {
  // lower bounds for the orders (valid after canonicalize; zero windows use trunc)
  int ordA = a.storedEmpty() ? a.trunc() : a.minExp();
  int ordB = b.storedEmpty() ? b.trunc() : b.minExp();
  int trunc = std::min(satAdd(a.trunc(), ordB), satAdd(b.trunc(), ordA));
  if (a.storedEmpty() || b.storedEmpty()) return TruncatedSeries::zeroKnownTo(trunc);
  int lo = ordA + ordB;
  int hi = trunc == TruncatedSeries::EXACT
               ? ordA + ordB + (int)a.coef().size() + (int)b.coef().size() - 1
               : trunc;
  if (hi <= lo) return TruncatedSeries::zeroKnownTo(trunc);
  std::vector<FieldElem> out((size_t)(hi - lo), K.zero());
  int na = (int)a.coef().size(), nb = (int)b.coef().size();
  for (int i = 0; i < na; ++i) {
    if (K.isZero(a.coef()[i])) continue;
    int base = a.minExp() + i + b.minExp() - lo;
    for (int j = 0; j < nb; ++j) {
      int k = base + j;
      if (k >= (int)out.size()) break;
      if (!K.isZero(b.coef()[j])) K.addMulInPlace(out[k], a.coef()[i], b.coef()[j]);
    }
  }
  TruncatedSeries r(lo, trunc, std::move(out));
  r.canonicalize(K);
  return r;
}

TruncatedSeries tsScale(const Field& K, const TruncatedSeries& a, const FieldElem& c) {
  if (K.isZero(c)) return TruncatedSeries::zeroKnownTo(a.trunc());
  std::vector<FieldElem> out;
  out.reserve(a.coef().size());
  for (auto& x : a.coef()) out.push_back(K.mul(x, c));
  return TruncatedSeries(a.minExp(), a.trunc(), std::move(out));
}

TruncatedSeries tsShift(const TruncatedSeries& a, int k) {
  return TruncatedSeries(a.minExp() + k, satAdd(a.trunc(), k), a.coef());
}

TruncatedSeries tsDeriv(const Field& K, const TruncatedSeries& a) {
  int trunc = a.exact() ? TruncatedSeries::EXACT : a.trunc() - 1;
  std::vector<FieldElem> out;
  out.reserve(a.coef().size());
  for (size_t i = 0; i < a.coef().size(); ++i) {
    int e = a.minExp() + (int)i;
    out.push_back(K.mulRat(a.coef()[i], Rat(e)));
  }
  TruncatedSeries r(a.minExp() - 1, trunc, std::move(out));
  r.canonicalize(K);
  return r;
}

TruncatedSeries tsTruncate(const Field& K, const TruncatedSeries& a, int newTrunc) {
  if (newTrunc > a.trunc()) throw InvariantViolation("cannot extend truncation");
  if (newTrunc == a.trunc()) return a;
  std::vector<FieldElem> out;
  for (int e = a.minExp(); e < std::min(newTrunc, a.minExp() + (int)a.coef().size()); ++e)
    out.push_back(a.at(K, e));
  TruncatedSeries r(std::min(a.minExp(), newTrunc), newTrunc, std::move(out));
  r.canonicalize(K);
  return r;
}

TruncatedSeries tsInvert(const Field& K, const TruncatedSeries& a, int targetTrunc) {
  auto ord = a.order(K);
  if (!ord) throw ComputationError("inverting a series that is zero up to truncation");
  int w = *ord;
  // coefficients of the inverse at relative offset k need a known to w+k+1
  int avail = a.exact() ? TruncatedSeries::EXACT : a.trunc() - 2 * w;
  int trunc = std::min(targetTrunc, avail);
  if (trunc == TruncatedSeries::EXACT) {
    // only a monomial has an exact Laurent inverse
    TruncatedSeries b = a;
    b.canonicalize(K);
    if (b.coef().size() == 1)
      return TruncatedSeries::monomial(K, K.inv(b.coef()[0]), -w);
    throw InputError("exact inverse requested for a non-monomial series");
  }
  if (trunc <= -w) throw TruncationError("no precision left to invert series");
  int n = trunc + w;  // #relative coefficients of the unit-part inverse
  std::vector<FieldElem> u((size_t)n, K.zero());
  FieldElem lead = a.at(K, w);
  FieldElem ilead = K.inv(lead);
  u[0] = ilead;
  for (int k = 1; k < n; ++k) {
    FieldElem acc = K.zero();
    for (int j = 0; j < k; ++j) {
      FieldElem ak = a.knownAt(w + k - j) ? a.at(K, w + k - j) : K.zero();
      if (!K.isZero(ak)) K.addMulInPlace(acc, u[j], ak);
    }
    u[k] = K.neg(K.mul(acc, ilead));
  }
  TruncatedSeries r(-w, trunc, std::move(u));
  r.canonicalize(K);
  return r;
}

TruncatedSeries tsPow(const Field& K, const TruncatedSeries& a, int n) {
  if (n < 0) throw InputError("negative power of a series");
  TruncatedSeries r = TruncatedSeries::monomial(K, K.one(), 0);
  for (int i = 0; i < n; ++i) r = tsMul(K, r, a);
  return r;
}

SeriesVector svAdd(const Field& K, const SeriesVector& a, const SeriesVector& b) {
  SeriesVector r;
  for (int j = 0; j < a.p(); ++j) r.comp.push_back(tsAdd(K, a.comp[j], b.comp[j]));
  return r;
}

SeriesVector svSub(const Field& K, const SeriesVector& a, const SeriesVector& b) {
  SeriesVector r;
  for (int j = 0; j < a.p(); ++j) r.comp.push_back(tsSub(K, a.comp[j], b.comp[j]));
  return r;
}

SeriesVector svScale(const Field& K, const SeriesVector& a, const FieldElem& c) {
  SeriesVector r;
  for (auto& s : a.comp) r.comp.push_back(tsScale(K, s, c));
  return r;
}

SeriesVector svShift(const SeriesVector& a, const std::vector<int>& k) {
  SeriesVector r;
  for (int j = 0; j < a.p(); ++j) r.comp.push_back(tsShift(a.comp[j], k[j]));
  return r;
}

SeriesVector svMulBranchwise(const Field& K, const SeriesVector& a, const SeriesVector& b) {
  SeriesVector r;
  for (int j = 0; j < a.p(); ++j) r.comp.push_back(tsMul(K, a.comp[j], b.comp[j]));
  return r;
}

bool MultiVal::finite() const {
  for (auto& x : v)
    if (!x) return false;
  return true;
}

IVec MultiVal::finitePart() const {
  IVec w;
  for (auto& x : v) {
    if (!x) throw InvariantViolation("finitePart of an infinite value");
    w.push_back(*x);
  }
  return w;
}

bool MultiVal::operator<(const MultiVal& o) const {
  for (int i = 0; i < p(); ++i) {
    long a = v[i] ? (long)*v[i] : LONG_MAX;
    long b = o.v[i] ? (long)*o.v[i] : LONG_MAX;
    if (a != b) return a < b;
  }
  return false;
}

MultiVal MultiVal::fromFinite(const IVec& w) {
  MultiVal m;
  for (int x : w) m.v.push_back(x);
  return m;
}

MultiVal svVal(const Field& K, const SeriesVector& a, const IVec& safeBound) {
  MultiVal m;
  for (int j = 0; j < a.p(); ++j) {
    auto o = a.comp[j].order(K);
    if (o) {
      m.v.push_back(*o);
    } else if (a.comp[j].trunc() > safeBound[j]) {
      m.v.push_back(std::nullopt);
    } else {
      throw TruncationError("cannot decide whether a component vanishes: raise truncation");
    }
  }
  return m;
}

std::string tsToString(const Field& K, const TruncatedSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.coef().size(); ++i) {
    if (K.isZero(a.coef()[i])) continue;
    int e = a.minExp() + (int)i;
    if (!first) os << " + ";
    os << "(" << K.str(a.coef()[i]) << ")";
    if (e != 0) os << "*t^" << e;
    first = false;
  }
  if (first) os << "0";
  if (!a.exact()) os << " + O(t^" << a.trunc() << ")";
  return os.str();
}

}  // namespace logres
