#include "logres/poincare.hpp"

#include <sstream>

#include "logres/errors.hpp"

namespace logres {

std::string lpStr(const LaurentPoly& P) {
  if (P.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : P.terms) {
    int a = c;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    a = std::abs(a);
    std::string mono;
    for (int i = 0; i < P.p; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (P.p == 1) ? "t" : "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << mono;
    }
    first = false;
  }
  return out.str();
}

int alphaAt(const ValueSet& s, const IVec& v) {
  int total = 0;
  for (unsigned mask = 0; mask < (1u << s.p); ++mask) {
    IVec w = v;
    int bits = 0;
    for (int i = 0; i < s.p; ++i)
      if (mask & (1u << i)) {
        --w[i];
        ++bits;
      }
    total += (bits % 2 ? -1 : 1) * s.cAt(w);
  }
  return total;
}

LaurentPoly poincarePoly(const ValueSet& s) {
  LaurentPoly P;
  P.p = s.p;
  IVec margin = ivConst(s.p, 2);
  forBox(ivSub(s.lam, margin), ivAdd(s.nu, margin), [&](const IVec& v) {
    int a = alphaAt(s, v);
    if (a == 0) return;
    if (!(ivLeq(s.lam, v) && ivLeq(v, s.nu)))
      throw InvariantViolation(
          "the Poincaré polynomial has a coefficient outside the value box");
    P.terms[v] = a;
  });
  return P;
}

int lpCoefficientSum(const LaurentPoly& P) {
  int s = 0;
  for (auto& [e, c] : P.terms) s += c;
  return s;
}

PoincareSymmetryReport poincareSymmetryCheck(const FractionalIdeal& I) {
  const Curve& C = *I.C;
  const ValueSet& vals = idealValues(I);
  ValueSet dual = dualValuesSymmetry(I);
  PoincareSymmetryReport rep;
  rep.poly = poincarePoly(vals);
  rep.dualPoly = poincarePoly(dual);
  int sign = (C.p % 2 == 1) ? 1 : -1;  // (-1)^(p+1)

  LaurentPoly expected;
  expected.p = C.p;
  for (auto& [e, c] : rep.poly.terms) expected.terms[ivSub(C.gamma, e)] = sign * c;
  if (!(rep.dualPoly == expected)) {
    rep.ok = false;
    rep.diff = "dual polynomial " + lpStr(rep.dualPoly) + " differs from " +
               lpStr(expected);
    return rep;
  }

  IVec one = ivConst(C.p, 1);
  IVec lo = ivSub(dual.lam, one), hi = ivAdd(dual.nu, one);
  bool done = false;
  forBox(lo, hi, [&](const IVec& v) {
    if (done) return;
    IVec mirror = ivSub(ivSub(C.gamma, v), one);
    if (dual.cAt(v) != C.p - vals.cAt(mirror)) {
      rep.ok = false;
      rep.diff = "counting functions break the symmetry at a window point";
      done = true;
      return;
    }
    if (alphaAt(dual, v) != sign * alphaAt(vals, ivSub(C.gamma, v))) {
      rep.ok = false;
      rep.diff = "alpha coefficients break the symmetry at a window point";
      done = true;
    }
  });
  return rep;
}

}  // namespace logres
