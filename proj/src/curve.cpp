#include "logres/curve.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>

#include "logres/errors.hpp"

namespace logres {

namespace {

TruncatedSeries polyFromTerms(const Field& K, const std::map<int, FieldElem>& terms) {
  TruncatedSeries s;  // exact zero
  for (auto& [e, c] : terms) s = tsAdd(K, s, TruncatedSeries::monomial(K, c, e));
  return s;
}

int maxDeclaredExp(const std::map<int, FieldElem>& terms) {
  int m = 0;
  for (auto& [e, c] : terms) m = std::max(m, e);
  return m;
}

// effective coefficient horizon of a branch: coefficients of every coordinate
// are known strictly below this
int branchHorizon(const BranchParam& br) {
  int h = TruncatedSeries::EXACT;
  for (auto& c : br.coords) h = std::min(h, c.trunc());
  return h;
}

int maxFiniteOrder(const Field& K, const BranchParam& br) {
  int m = 0;
  for (auto& c : br.coords) {
    auto o = c.order(K);
    if (o) m = std::max(m, *o);
  }
  return m;
}

}  // namespace

IVec Curve::multiplicities() const {
  IVec v;
  for (auto& b : branches) v.push_back(b.mult);
  return v;
}

SeriesVector Curve::coordFunction(int l) const {
  SeriesVector sv;
  for (auto& b : branches) sv.comp.push_back(b.coords[l]);
  return sv;
}

std::vector<SeriesVector> Curve::coordFunctions() const {
  std::vector<SeriesVector> v;
  for (int l = 0; l < m; ++l) v.push_back(coordFunction(l));
  return v;
}

SeriesVector Curve::one() const {
  SeriesVector sv;
  for (int j = 0; j < p; ++j) sv.comp.push_back(TruncatedSeries::monomial(K, K.one(), 0));
  return sv;
}

IVec Curve::safeBounds() const {
  IVec b;
  for (int j = 0; j < p; ++j) b.push_back(2 * gamma[j] + 1);
  return b;
}

Curve Curve::branchCurve(int j) const {
  std::vector<Polynomial> eqs;
  std::optional<Polynomial> f;
  if ((int)branchEquations.size() == p) {
    eqs = {branchEquations[j]};
    f = branchEquations[j];
  }
  return buildCurve(K, {branches[j]}, std::move(eqs), std::move(f), N);
}

Polynomial polyMul(const Field& K, const Polynomial& a, const Polynomial& b) {
  if (a.nvars != b.nvars) throw InputError("polynomial arity mismatch");
  Polynomial r = Polynomial::zero(a.nvars);
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      std::vector<int> e = ea;
      for (int i = 0; i < a.nvars; ++i) e[i] += eb[i];
      r.addTerm(K, e, K.mul(ca, cb));
    }
  return r;
}

BranchParam henselLiftBranch(const Field& K, const Polynomial& f, const BranchSeed& seed,
                             int N) {
  int m = (int)seed.coordTerms.size();
  if (m != f.nvars) throw InputError("seed arity does not match the equation");
  if (N < 4) throw InputError("truncation too small");
  for (auto& terms : seed.coordTerms)
    for (auto& [e, c] : terms) {
      if (e < 1) throw InputError("seed exponents must be >= 1 (germ at the origin)");
      (void)c;
    }
  std::vector<TruncatedSeries> coords;
  for (auto& terms : seed.coordTerms) coords.push_back(polyFromTerms(K, terms));

  // pick the lift coordinate: the equation's derivative must have finite
  // order along the seed, and corrections must land above the declared terms
  auto usable = [&](int l, int& ordLOut) -> bool {
    auto L = f.diff(K, l).evalSeries(K, coords);
    auto oL = L.order(K);
    if (!oL) return false;
    auto R = f.evalSeries(K, coords);
    auto oR = R.order(K);
    if (!oR) {  // seed is already an exact root
      ordLOut = *oL;
      return true;
    }
    int e0 = *oR - *oL;
    if (e0 < 1 || e0 <= maxDeclaredExp(seed.coordTerms[l])) return false;
    ordLOut = *oL;
    return true;
  };

  int lift = -1, ordL0 = -1;
  if (seed.liftCoord >= 0) {
    if (seed.liftCoord >= m) throw InputError("lift coordinate out of range");
    if (!usable(seed.liftCoord, ordL0))
      throw InputError("declared lift coordinate cannot absorb the corrections");
    lift = seed.liftCoord;
  } else {
    for (int l = m - 1; l >= 0; --l)
      if (usable(l, ordL0)) {
        lift = l;
        break;
      }
    if (lift < 0) throw InputError("no usable lift coordinate for this seed");
  }

  const int target = N + ordL0;
  int prevOrd = -1;
  while (true) {
    auto R = f.evalSeries(K, coords);
    auto oR = R.order(K);
    if (!oR) break;  // exact root
    int r = *oR;
    if (r >= target) break;
    if (prevOrd >= 0 && r <= prevOrd)
      throw InvariantViolation("residual order did not increase during the lift");
    prevOrd = r;
    auto L = f.diff(K, lift).evalSeries(K, coords);
    auto oL = L.order(K);
    if (!oL) throw ComputationError("derivative degenerated during the lift");
    int e = r - *oL;
    if (e < 1 || e <= maxDeclaredExp(seed.coordTerms[lift]))
      throw InputError("declared seed terms are inconsistent with the equation");
    FieldElem c = K.neg(K.div(R.at(K, r), L.at(K, *oL)));
    coords[lift] = tsAdd(K, coords[lift], TruncatedSeries::monomial(K, c, e));
  }
  // solved coefficients are exact below N; beyond that unknown
  coords[lift] = tsTruncate(K, coords[lift], N);

  BranchParam br;
  br.coords = std::move(coords);
  int mult = TruncatedSeries::EXACT;
  for (auto& c : br.coords) {
    auto o = c.order(K);
    if (o) {
      if (*o < 1) throw InputError("branch does not pass through the origin");
      mult = std::min(mult, *o);
    }
  }
  if (mult >= TruncatedSeries::EXACT) throw InputError("seed parametrizes a point");
  br.mult = mult;
  return br;
}

std::optional<SqhShape> detectSqhShape(const Field& K, const Polynomial& f) {
  if (f.nvars != 2) return std::nullopt;
  int a = -1, b = -1;
  for (auto& [e, c] : f.terms) {
    if (e[1] == 0 && e[0] >= 2 && K.eq(c, K.one())) a = e[0];
    if (e[0] == 0 && e[1] >= 2 && K.eq(c, K.neg(K.one()))) b = e[1];
  }
  if (a < 2 || b < 2) return std::nullopt;
  if (std::gcd(a, b) != 1) return std::nullopt;
  for (auto& [e, c] : f.terms) {
    if ((e[0] == a && e[1] == 0) || (e[0] == 0 && e[1] == b)) continue;
    if ((long)e[0] * b + (long)e[1] * a <= (long)a * b) return std::nullopt;
  }
  return SqhShape{a, b};
}

std::optional<BranchParam> sqhParametrize(const Field& K, const Polynomial& f, int N) {
  auto shape = detectSqhShape(K, f);
  if (!shape) return std::nullopt;
  BranchSeed seed;
  seed.coordTerms.resize(2);
  seed.coordTerms[0][shape->b] = K.one();  // x = t^b
  seed.coordTerms[1][shape->a] = K.one();  // y = t^a + corrections
  seed.liftCoord = 1;
  return henselLiftBranch(K, f, seed, N);
}

int intersectionMultiplicity(const Field& K, const Polynomial& f, const BranchParam& br) {
  auto R = f.evalSeries(K, br.coords);
  auto o = R.order(K);
  if (!o)
    throw TruncationError(
        "equation vanishes on the branch up to truncation: branches may coincide "
        "or the truncation is too low");
  return *o;
}

namespace {

// value-closure of the one-branch coordinate ring: semigroup orders <= top.
// Reduction against a witness per order makes hidden values (like ord(y^2-x^3))
// surface; everything is capped at top+1 since higher coefficients never
// influence orders <= top.
std::set<int> branchSemigroupClosure(const Field& K, const BranchParam& br, int top) {
  std::map<int, TruncatedSeries> slots;
  std::deque<TruncatedSeries> work;
  work.push_back(TruncatedSeries::monomial(K, K.one(), 0));
  while (!work.empty()) {
    TruncatedSeries e = std::move(work.front());
    work.pop_front();
    if (e.trunc() > top + 1) e = tsTruncate(K, e, top + 1);
    while (true) {
      auto o = e.order(K);
      if (!o) break;
      if (*o > top) break;
      auto it = slots.find(*o);
      if (it == slots.end()) {
        slots.emplace(*o, e);
        for (auto& c : br.coords)
          if (c.order(K)) work.push_back(tsMul(K, e, c));
        break;
      }
      FieldElem ratio = K.div(e.at(K, *o), it->second.at(K, *o));
      e = tsSub(K, e, tsScale(K, it->second, ratio));
    }
  }
  std::set<int> S;
  for (auto& [o, w] : slots) S.insert(o);
  return S;
}

struct SemigroupData {
  std::set<int> values;
  int top;
  int conductor;
};

SemigroupData analyzeBranchSemigroup(const Field& K, const BranchParam& br, int slack) {
  SemigroupData d;
  int horizon = branchHorizon(br);
  bool exact = horizon == TruncatedSeries::EXACT;
  int maxOrd = maxFiniteOrder(K, br);
  int top = exact ? 2 * maxOrd + 2 * slack + 8 : horizon - maxOrd - 1;
  if (!exact && top < 2 * br.mult + 2)
    throw RaiseTruncation("branch truncation too low for its semigroup",
                          4 * (2 * br.mult + 2) + maxOrd + 1);
  for (int attempt = 0;; ++attempt) {
    d.top = top;
    d.values = branchSemigroupClosure(K, br, top);
    // conductor: one past the last gap; a run of length mult starting there
    // certifies that everything beyond the window belongs to the semigroup
    int lastGap = -1;
    for (int v = 0; v <= top; ++v)
      if (!d.values.count(v)) lastGap = v;
    int c = lastGap + 1;
    if (c + br.mult - 1 <= top) {
      d.conductor = c;
      return d;
    }
    if (exact && attempt < 6) {
      top = 2 * top + 8;
      continue;
    }
    throw RaiseTruncation("cannot certify the branch conductor: raise truncation",
                          2 * (c + br.mult) + slack + 2 * maxOrd + 2);
  }
}

// conductor by direct search: smallest box corner whose upper quadrant lies in
// the value set, certified on a margin and on the axes
IVec searchConductor(const Curve& C, const std::vector<SemigroupData>& sg, int slack) {
  const Field& K = C.K;
  auto coordFns = C.coordFunctions();
  int p = C.p;
  IVec B(p);  // usable window top per branch
  for (int j = 0; j < p; ++j) {
    int horizon = branchHorizon(C.branches[j]);
    B[j] = horizon == TruncatedSeries::EXACT
               ? INT_MAX / 8
               : horizon - maxFiniteOrder(K, C.branches[j]) - 1;
  }
  int margin = 2;
  for (int j = 0; j < p; ++j) margin = std::max(margin, sg[j].conductor + 2);
  IVec W(p);
  for (int j = 0; j < p; ++j)
    W[j] = std::min(B[j], sg[j].conductor + 2 * C.branches[j].mult + margin);

  for (int attempt = 0;; ++attempt) {
    ModuleSpan span(K, coordFns, Window{ivConst(p, 0), W}, {C.one()});
    auto pts = memberPointsFromSpan(span);
    // upward-full closure on the box
    std::map<IVec, bool> full;
    // iterate in reverse lexicographic order to have successors ready
    std::vector<IVec> order;
    forBox(ivConst(p, 0), W, [&](const IVec& v) { order.push_back(v); });
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const IVec& v = *it;
      bool ok = pts.count(v) > 0;
      for (int k = 0; k < p && ok; ++k) {
        IVec u = v;
        u[k] += 1;
        if (u[k] <= W[k] && !full[u]) ok = false;
      }
      full[v] = ok;
    }
    std::optional<IVec> gmin;
    for (auto& [v, ok] : full)
      if (ok) gmin = gmin ? ivMin(*gmin, v) : v;

    bool good = gmin && full[*gmin];
    if (good) {
      for (int j = 0; j < p && good; ++j)
        if ((*gmin)[j] + margin > W[j]) good = false;
    }
    if (good) {
      // axis certificates: pure one-branch monomials above the corner belong
      // to the ring modulo the window
      for (int j = 0; j < p && good; ++j)
        for (int e = (*gmin)[j]; e <= W[j] && good; ++e) {
          SeriesVector mono;
          for (int i = 0; i < p; ++i)
            mono.comp.push_back(i == j ? TruncatedSeries::monomial(K, K.one(), e)
                                       : TruncatedSeries());
          if (!span.contains(mono)) good = false;
        }
    }
    if (good) return *gmin;

    // enlarge the window and retry
    bool grew = false;
    for (int j = 0; j < p; ++j) {
      int nw = std::min(B[j], 2 * W[j] + 4);
      if (nw > W[j]) {
        W[j] = nw;
        grew = true;
      }
    }
    if (!grew || attempt >= 3)
      throw RaiseTruncation("cannot certify the conductor inside the available window",
                            4 * (*std::max_element(W.begin(), W.end())) + slack);
  }
}

}  // namespace

Curve buildCurve(Field K, std::vector<BranchParam> branches,
                 std::vector<Polynomial> branchEquations,
                 std::optional<Polynomial> planeEquation, int N, const CurveOptions& opt) {
  Curve C{std::move(K)};
  C.p = (int)branches.size();
  if (C.p < 1) throw InputError("a curve needs at least one branch");
  C.m = (int)branches[0].coords.size();
  if (C.m < 2) throw InputError("need at least two ambient coordinates");
  for (auto& b : branches)
    if ((int)b.coords.size() != C.m) throw InputError("branches with different arities");
  C.N = N;
  C.branches = std::move(branches);

  const Field& F = C.K;
  // per-branch checks: orders >= 1, at least one finite, primitive parametrization
  for (auto& b : C.branches) {
    int mult = TruncatedSeries::EXACT;
    int g = 0;
    for (auto& c : b.coords) {
      auto o = c.order(F);
      if (o) {
        if (*o < 1) throw InputError("branch does not pass through the origin");
        mult = std::min(mult, *o);
      }
      TruncatedSeries cc = c;
      cc.canonicalize(F);
      for (size_t i = 0; i < cc.coef().size(); ++i)
        if (!F.isZero(cc.coef()[i])) g = std::gcd(g, cc.minExp() + (int)i);
    }
    if (mult >= TruncatedSeries::EXACT)
      throw InputError("branch with all coordinates zero");
    b.mult = mult;
    if (g != 1)
      throw InputError("branch parametrization is not primitive in the visible window");
  }
  // branches must be pairwise distinct as far as the data shows
  for (int i = 0; i < C.p; ++i)
    for (int j = i + 1; j < C.p; ++j) {
      bool distinct = false;
      for (int l = 0; l < C.m && !distinct; ++l)
        if (tsSub(F, C.branches[i].coords[l], C.branches[j].coords[l]).order(F))
          distinct = true;
      if (!distinct) throw InputError("two branches coincide up to truncation");
    }

  // equations
  if (!branchEquations.empty()) {
    if ((int)branchEquations.size() != C.p)
      throw InputError("need one equation per branch");
    if (C.m != 2) throw InputError("branch equations are supported for plane curves only");
    for (int j = 0; j < C.p; ++j) {
      if (branchEquations[j].isZero() || branchEquations[j].nvars != 2)
        throw InputError("bad branch equation");
      if (branchEquations[j].minTotalDegree() < 1)
        throw InputError("equation does not vanish at the origin");
      auto R = branchEquations[j].evalSeries(F, C.branches[j].coords);
      if (R.order(F))
        throw InputError("equation does not vanish on its branch");
    }
    C.branchEquations = std::move(branchEquations);
    Polynomial prod = C.branchEquations[0];
    for (int j = 1; j < C.p; ++j) prod = polyMul(F, prod, C.branchEquations[j]);
    if (planeEquation) {
      // accept the user's product if it is proportional to ours
      const Polynomial& g = *planeEquation;
      bool ok = g.nvars == 2 && g.terms.size() == prod.terms.size() && !g.isZero();
      if (ok) {
        FieldElem ratio = F.zero();
        for (auto& [e, c] : prod.terms) {
          auto it = g.terms.find(e);
          if (it == g.terms.end()) {
            ok = false;
            break;
          }
          FieldElem r = F.div(it->second, c);
          if (F.isZero(ratio))
            ratio = r;
          else if (!F.eq(ratio, r))
            ok = false;
        }
      }
      if (!ok) throw InputError("the given product equation does not match the branches");
      C.planeEquation = *planeEquation;
    } else {
      C.planeEquation = std::move(prod);
    }
  } else if (planeEquation) {
    if (C.p == 1 && C.m == 2) {
      C.branchEquations = {*planeEquation};
      auto R = planeEquation->evalSeries(F, C.branches[0].coords);
      if (R.order(F))
        throw InputError("equation does not vanish on its branch");
      C.planeEquation = std::move(planeEquation);
    } else {
      throw InputError("a single product equation needs per-branch factors");
    }
  }

  // branch semigroups and conductors
  std::vector<SemigroupData> sg;
  for (auto& b : C.branches) sg.push_back(analyzeBranchSemigroup(F, b, opt.slack));
  for (auto& d : sg) {
    C.branchSemigroup.push_back(d.values);
    C.semigroupWindowTop.push_back(d.top);
    C.branchConductor.push_back(d.conductor);
  }

  // intersection multiplicities (plane with equations)
  if (!C.branchEquations.empty() && C.p > 1) {
    C.intersections.assign(C.p, IVec(C.p, -1));
    for (int i = 0; i < C.p; ++i)
      for (int j = 0; j < C.p; ++j)
        if (i != j)
          C.intersections[i][j] =
              intersectionMultiplicity(F, C.branchEquations[i], C.branches[j]);
  }

  // conductor
  C.gamma.resize(C.p);
  if (C.p == 1) {
    C.gamma[0] = C.branchConductor[0];
  } else if (!C.intersections.empty()) {
    for (int j = 0; j < C.p; ++j) {
      int g = C.branchConductor[j];
      for (int i = 0; i < C.p; ++i)
        if (i != j) g += C.intersections[i][j];
      C.gamma[j] = g;
    }
  } else {
    C.gamma = searchConductor(C, sg, opt.slack);
  }

  // precision policy: everything downstream needs coefficients to 2*gamma+slack
  int needed = 0;
  for (int j = 0; j < C.p; ++j) {
    int req = 2 * C.gamma[j] + opt.slack;
    needed = std::max(needed, req + maxFiniteOrder(F, C.branches[j]) + 1);
    if (branchHorizon(C.branches[j]) < req + 1) {
      throw RaiseTruncation("truncation below the working requirement 2*gamma + slack",
                            needed);
    }
  }

  // value set of O on [0, gamma]
  ModuleSpan span(F, C.coordFunctions(), Window{ivConst(C.p, 0), C.gamma}, {C.one()});
  C.valO = valueSetFromSpan(span, ivConst(C.p, 0), C.gamma);

  int sum = 0;
  for (int g : C.gamma) sum += g;
  C.delta = sum - C.valO.ell(C.gamma);
  C.mu = 2 * C.delta - C.p + 1;
  return C;
}

}  // namespace logres
