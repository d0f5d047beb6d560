#include "logres/poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

void Polynomial::addTerm(const Field& K, const std::vector<int>& exps, const FieldElem& c) {
  if ((int)exps.size() != nvars) throw InputError("exponent vector has wrong length");
  for (int e : exps)
    if (e < 0) throw InputError("negative exponent in polynomial");
  if (K.isZero(c)) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, c);
  } else {
    it->second = K.add(it->second, c);
    if (K.isZero(it->second)) terms.erase(it);
  }
}

Polynomial Polynomial::diff(const Field& K, int var) const {
  Polynomial d = Polynomial::zero(nvars);
  for (auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    std::vector<int> e2 = e;
    e2[var] -= 1;
    d.addTerm(K, e2, K.mulRat(c, Rat(e[var])));
  }
  return d;
}

int Polynomial::minTotalDegree() const {
  int best = INT_MAX / 4;
  for (auto& [e, c] : terms) {
    int s = 0;
    for (int x : e) s += x;
    best = std::min(best, s);
  }
  return best;
}

int Polynomial::maxDegree(int var) const {
  int best = 0;
  for (auto& [e, c] : terms) best = std::max(best, e[var]);
  return best;
}

TruncatedSeries Polynomial::evalSeries(const Field& K,
                                       const std::vector<TruncatedSeries>& xs) const {
  if ((int)xs.size() != nvars) throw InputError("wrong number of series for evaluation");
  // cache powers of each variable
  std::vector<std::vector<TruncatedSeries>> pw(nvars);
  for (int v = 0; v < nvars; ++v) {
    pw[v].push_back(TruncatedSeries::monomial(K, K.one(), 0));  // x^0 = 1
    int dmax = maxDegree(v);
    for (int k = 1; k <= dmax; ++k) pw[v].push_back(tsMul(K, pw[v].back(), xs[v]));
  }
  TruncatedSeries acc;  // exact zero
  for (auto& [e, c] : terms) {
    TruncatedSeries term = TruncatedSeries::monomial(K, c, 0);
    for (int v = 0; v < nvars; ++v)
      if (e[v] > 0) term = tsMul(K, term, pw[v][e[v]]);
    acc = tsAdd(K, acc, term);
  }
  return acc;
}

FieldElem Polynomial::evalConst(const Field& K, const std::vector<FieldElem>& xs) const {
  FieldElem acc = K.zero();
  for (auto& [e, c] : terms) {
    FieldElem t = c;
    for (int v = 0; v < nvars; ++v)
      for (int k = 0; k < e[v]; ++k) t = K.mul(t, xs[v]);
    acc = K.add(acc, t);
  }
  return acc;
}

std::string Polynomial::str(const Field& K, const std::vector<std::string>& varNames) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    if (!first) os << " + ";
    os << "(" << K.str(c) << ")";
    for (int v = 0; v < nvars; ++v) {
      if (e[v] == 0) continue;
      os << "*" << varNames[v];
      if (e[v] > 1) os << "^" << e[v];
    }
    first = false;
  }
  return os.str();
}

Polynomial polyAdd(const Field& K, const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (auto& [e, c] : b.terms) r.addTerm(K, e, c);
  return r;
}

Polynomial polyScale(const Field& K, const Polynomial& a, const FieldElem& c) {
  Polynomial r = Polynomial::zero(a.nvars);
  for (auto& [e, x] : a.terms) r.addTerm(K, e, K.mul(x, c));
  return r;
}

}  // namespace logres
