#include "logres/lattice.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

IVec ivAdd(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

IVec ivSub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

IVec ivMin(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(r[i], b[i]);
  return r;
}

IVec ivMax(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

IVec ivConst(int p, int c) { return IVec((size_t)p, c); }

bool ivLeq(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void forBox(const IVec& lo, const IVec& hi, const std::function<void(const IVec&)>& f) {
  if (!ivLeq(lo, hi)) return;
  IVec cur = lo;
  while (true) {
    f(cur);
    int j = (int)cur.size() - 1;
    while (j >= 0) {
      if (++cur[j] <= hi[j]) break;
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) return;
  }
}

bool ValueSet::inBoxRange(const IVec& v) const { return ivLeq(lam, v) && ivLeq(v, nu); }

bool ValueSet::member(const IVec& v) const {
  if (!ivLeq(lam, v)) return false;
  return box.count(ivMin(v, nu)) > 0;
}

bool ValueSet::lambdaNonempty(int i, const IVec& w) const {
  if (w[i] < lam[i]) return false;
  int target = std::min(w[i], nu[i]);
  for (const IVec& a : box) {
    if (a[i] != target) continue;
    bool ok = true;
    for (int j = 0; j < p && ok; ++j) {
      if (j == i) continue;
      if (w[j] <= nu[j]) {
        if (a[j] < w[j]) ok = false;
      } else {
        if (a[j] != nu[j]) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool ValueSet::deltaNonempty(int i, const IVec& v) const {
  IVec w = v;
  for (int j = 0; j < p; ++j)
    if (j != i) w[j] += 1;
  return lambdaNonempty(i, w);
}

bool ValueSet::deltaNonempty(const IVec& v) const {
  for (int i = 0; i < p; ++i)
    if (deltaNonempty(i, v)) return true;
  return false;
}

int ValueSet::ell(const IVec& v) const {
  IVec cur = lam;
  IVec target = ivMax(v, lam);
  int cnt = 0;
  for (int j = 0; j < p; ++j)
    while (cur[j] < target[j]) {
      if (lambdaNonempty(j, cur)) ++cnt;
      cur[j] += 1;
    }
  return cnt;
}

int ValueSet::cAt(const IVec& v) const {
  IVec w = v;
  int cnt = 0;
  for (int i = 0; i < p; ++i) {
    if (lambdaNonempty(i, w)) ++cnt;
    w[i] += 1;
  }
  return cnt;
}

ValueSet ValueSet::dualBySymmetry(const IVec& gamma) const {
  ValueSet d;
  d.p = p;
  d.lam = ivSub(gamma, nu);
  d.nu = ivSub(gamma, lam);
  forBox(d.lam, d.nu, [&](const IVec& v) {
    for (int i = 0; i < p; ++i) {
      IVec w = ivSub(gamma, v);
      w[i] -= 1;
      if (lambdaNonempty(i, w)) return;
    }
    d.box.insert(v);
  });
  if (d.box.empty())
    throw InvariantViolation("dual value set came out empty; gamma is inconsistent");
  // gamma - nu is only a bound; tighten lam to the actual componentwise min
  // (membership is unchanged: min(v, nu) in box already forces v >= lam)
  IVec m = d.nu;
  for (const IVec& v : d.box) m = ivMin(m, v);
  d.lam = m;
  return d;
}

bool ValueSet::memberWithInf(const MultiVal& w) const {
  IVec v(p);
  for (int j = 0; j < p; ++j) v[j] = w.v[j] ? *w.v[j] : nu[j];
  for (int j = 0; j < p; ++j)
    if (!w.v[j] && v[j] < lam[j]) return false;  // cannot happen for nu >= lam
  return member(v);
}

std::set<MultiVal> ValueSet::zeroDivisorValuesInBox() const {
  std::set<MultiVal> out;
  if (p == 1) return out;  // a domain has no zero divisors
  for (const IVec& v : box) {
    std::vector<int> atNu;
    for (int j = 0; j < p; ++j)
      if (v[j] == nu[j]) atNu.push_back(j);
    if (atNu.empty()) continue;
    int n = (int)atNu.size();
    for (int mask = 1; mask < (1 << n); ++mask) {
      MultiVal w = MultiVal::fromFinite(v);
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) w.v[atNu[b]] = std::nullopt;
      out.insert(std::move(w));
    }
  }
  return out;
}

void ValueSet::validate() const {
  if ((int)lam.size() != p || (int)nu.size() != p)
    throw InvariantViolation("value set corner size mismatch");
  if (!ivLeq(lam, nu)) throw InvariantViolation("value set with lam > nu");
  if (!box.count(nu)) throw InvariantViolation("nu corner is not a value");
  IVec minOfBox = nu;
  for (const IVec& v : box) {
    if (!inBoxRange(v)) throw InvariantViolation("box value outside [lam, nu]");
    minOfBox = ivMin(minOfBox, v);
  }
  if (box.empty() || minOfBox != lam)
    throw InvariantViolation("lam is not the componentwise min of the values");
  for (const IVec& a : box)
    for (const IVec& b : box)
      if (!member(ivMin(a, b)))
        throw InvariantViolation("value set not closed under componentwise min");
}

ValueSet makeValueSetFromBox(int p, IVec lam, IVec nu, std::set<IVec> box) {
  ValueSet s;
  s.p = p;
  s.lam = std::move(lam);
  s.nu = std::move(nu);
  s.box = std::move(box);
  return s;
}

ValueSet normalizationValueSet(int p) {
  return makeValueSetFromBox(p, ivConst(p, 0), ivConst(p, 0), {ivConst(p, 0)});
}

ValueSet shiftValueSet(const ValueSet& s, const IVec& k) {
  std::set<IVec> box;
  for (const IVec& v : s.box) box.insert(ivAdd(v, k));
  return makeValueSetFromBox(s.p, ivAdd(s.lam, k), ivAdd(s.nu, k), std::move(box));
}

ValueSet negativeWindowReconstruct(int p, const std::set<IVec>& window) {
  if (window.empty())
    throw InvariantViolation("the non-positive value window cannot be empty");
  IVec zero = ivConst(p, 0);
  if (!window.count(zero))
    throw InvariantViolation("the non-positive value window must contain 0");
  IVec lam = zero;
  for (const IVec& v : window) {
    if (!ivLeq(v, zero))
      throw InvariantViolation("positive entry in the non-positive value window");
    lam = ivMin(lam, v);
  }
  ValueSet s = makeValueSetFromBox(p, lam, zero, window);
  s.validate();
  return s;
}

bool sameMembership(const ValueSet& a, const ValueSet& b) {
  if (a.p != b.p) return false;
  IVec lo = ivMin(a.lam, b.lam);
  IVec hi = ivMax(a.nu, b.nu);
  bool same = true;
  forBox(lo, hi, [&](const IVec& v) {
    if (same && a.member(v) != b.member(v)) same = false;
  });
  return same;
}

int dimBetween(const ValueSet& big, const ValueSet& small) {
  IVec w = ivMax(big.nu, small.nu);
  int d = big.ell(w) - small.ell(w);
  if (d < 0) throw InvariantViolation("negative dimension between value sets");
  return d;
}

}  // namespace logres
