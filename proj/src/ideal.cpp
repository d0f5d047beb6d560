#include "logres/ideal.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <utility>

#include "logres/errors.hpp"

namespace logres {

SeriesVector svMonomialAt(const Field& K, int p, int j, const FieldElem& c, int e) {
  SeriesVector sv;
  sv.comp.resize(p);
  sv.comp[j] = TruncatedSeries::monomial(K, c, e);
  return sv;
}

SeriesVector svUnitMonomial(const Field& K, const IVec& e) {
  SeriesVector sv;
  sv.comp.reserve(e.size());
  for (int ej : e) sv.comp.push_back(TruncatedSeries::monomial(K, K.one(), ej));
  return sv;
}

FractionalIdeal makeIdeal(const Curve& C, std::vector<SeriesVector> gens) {
  const Field& K = C.K;
  FractionalIdeal I;
  I.C = &C;
  IVec safe = C.safeBounds();
  for (SeriesVector& g : gens) {
    if (g.p() != C.p) throw InputError("ideal generator arity differs from the branch count");
    bool allZero = true;
    for (TruncatedSeries& c : g.comp) {
      c.canonicalize(K);
      if (!(c.exact() && c.storedEmpty())) allZero = false;
    }
    if (allZero) continue;
    MultiVal v = svVal(K, g, safe);
    I.gens.push_back(std::move(g));
    I.genVals.push_back(std::move(v));
  }
  if (I.gens.empty()) throw InputError("the ideal needs at least one nonzero generator");
  IVec lam(C.p, INT_MAX / 4), minNzd(C.p, INT_MAX / 4);
  bool haveNzd = false;
  for (const MultiVal& v : I.genVals) {
    for (int j = 0; j < C.p; ++j)
      if (v.v[j]) lam[j] = std::min(lam[j], *v.v[j]);
    if (v.finite()) {
      haveNzd = true;
      minNzd = ivMin(minNzd, v.finitePart());
    }
  }
  if (!haveNzd)
    throw InputError(
        "the ideal needs a generator that is a non zero divisor "
        "(finite order on every branch)");
  I.lam = std::move(lam);
  I.nu = ivAdd(C.gamma, minNzd);
  // a component declared infinite must be certified zero out to the window
  for (size_t i = 0; i < I.gens.size(); ++i)
    for (int j = 0; j < C.p; ++j)
      if (!I.genVals[i].v[j] && !I.gens[i].comp[j].exact() &&
          I.gens[i].comp[j].trunc() <= I.nu[j])
        throw TruncationError(
            "an ideal generator vanishes to its truncation on a branch, but the "
            "value window reaches beyond it");
  return I;
}

ValueSet valueSetRankOracle(const FractionalIdeal& I) {
  const Curve& C = *I.C;
  ModuleSpan span(C.K, C.coordFunctions(), Window{I.lam, I.nu}, I.gens);
  return valueSetFromSpan(span, I.lam, I.nu);
}

const ValueSet& idealValues(const FractionalIdeal& I) {
  if (!I.cache) {
    I.cache = valueSetRankOracle(I);
    I.cache->validate();
  }
  return *I.cache;
}

int idealEll(const FractionalIdeal& I, const IVec& v) { return idealValues(I).ell(v); }

int idealCAt(const FractionalIdeal& I, const IVec& v) { return idealValues(I).cAt(v); }

ValueSet dualValuesSymmetry(const FractionalIdeal& I) {
  return idealValues(I).dualBySymmetry(I.C->gamma);
}

FractionalIdeal dualDirect(const FractionalIdeal& I) {
  const Curve& C = *I.C;
  const Field& K = C.K;
  const int p = C.p;
  const IVec& gamma = C.gamma;
  // unknown monomials t_j^e of the window part, e in [gamma_j - nu_j, gamma_j - lam_j - 1];
  // everything of the dual with larger support lies in t^(gamma-lam) * O~
  std::vector<std::pair<int, int>> unknowns;
  for (int j = 0; j < p; ++j)
    for (int e = gamma[j] - I.nu[j]; e <= gamma[j] - I.lam[j] - 1; ++e)
      unknowns.emplace_back(j, e);
  std::vector<SeriesVector> dualGens;
  if (!unknowns.empty()) {
    // the products h * g_i live on [gamma - nu + lam, gamma - 1]; testing
    // membership in O there only needs the image of O on that window, since
    // whatever is supported above gamma - 1 lies in the conductor
    IVec plo(p), phi(p);
    for (int j = 0; j < p; ++j) {
      plo[j] = std::min(0, gamma[j] - I.nu[j] + I.lam[j]);
      phi[j] = std::max(gamma[j] - 1, 0);
    }
    ModuleSpan ringSpan(K, C.coordFunctions(), Window{plo, phi}, {C.one()});
    const int ncols = ringSpan.ncols();
    const int ngens = (int)I.gens.size();
    std::vector<KVec> eq((size_t)ngens * ncols, KVec(unknowns.size(), K.zero()));
    for (size_t u = 0; u < unknowns.size(); ++u) {
      const int j = unknowns[u].first, e = unknowns[u].second;
      for (int i = 0; i < ngens; ++i) {
        SeriesVector prod;
        prod.comp.resize(p);
        prod.comp[j] = tsShift(I.gens[i].comp[j], e);
        auto row = ringSpan.clip(prod);
        if (!row) continue;
        KVec rem = ringSpan.reduceRow(std::move(*row));
        for (int c = 0; c < ncols; ++c)
          if (!K.isZero(rem[c])) eq[(size_t)i * ncols + c][u] = rem[c];
      }
    }
    for (const KVec& h : nullspaceOf(K, eq, (int)unknowns.size())) {
      SeriesVector hv;
      hv.comp.resize(p);
      for (size_t u = 0; u < unknowns.size(); ++u) {
        if (K.isZero(h[u])) continue;
        hv.comp[unknowns[u].first] = tsAdd(K, hv.comp[unknowns[u].first],
                                           TruncatedSeries::monomial(K, h[u], unknowns[u].second));
      }
      dualGens.push_back(std::move(hv));
    }
  }
  // generators of t^(gamma-lam) * O~ over O: one monomial run per branch,
  // plus a diagonal monomial that is a non zero divisor
  for (int j = 0; j < p; ++j)
    for (int e = gamma[j] - I.lam[j]; e <= 2 * gamma[j] - I.lam[j]; ++e)
      dualGens.push_back(svMonomialAt(K, p, j, K.one(), e));
  dualGens.push_back(svUnitMonomial(K, ivSub(gamma, I.lam)));
  return makeIdeal(C, dualGens);
}

ValueSet valueAlgoP1(const FractionalIdeal& I) {
  const Curve& C = *I.C;
  const Field& K = C.K;
  if (C.p != 1) throw InputError("the closing procedure handles a single branch");
  const int T = I.nu[0];
  const int cap = T + 1;  // coefficients above the window never matter
  std::vector<TruncatedSeries> mults;
  for (const SeriesVector& c : C.coordFunctions()) mults.push_back(c.comp[0]);
  std::map<int, TruncatedSeries> slots;  // value -> witness
  std::deque<TruncatedSeries> work;
  for (const SeriesVector& g : I.gens) work.push_back(g.comp[0]);
  while (!work.empty()) {
    TruncatedSeries e = std::move(work.front());
    work.pop_front();
    if (e.trunc() > cap) e = tsTruncate(K, e, cap);
    while (true) {
      auto o = e.order(K);
      if (!o) {
        if (e.trunc() <= T)
          throw TruncationError(
              "single-branch closure: an element vanishes to its truncation "
              "inside the value window");
        break;
      }
      if (*o > T) break;
      auto it = slots.find(*o);
      if (it == slots.end()) {
        slots.emplace(*o, e);
        for (const TruncatedSeries& m : mults) {
          TruncatedSeries prod = tsMul(K, e, m);
          if (prod.trunc() > cap) prod = tsTruncate(K, prod, cap);
          work.push_back(std::move(prod));
        }
        break;
      }
      // two elements share a value: cancel the leading terms to reveal the
      // next value of their span
      FieldElem ratio = K.div(e.at(K, *o), it->second.at(K, *o));
      e = tsSub(K, e, tsScale(K, it->second, ratio));
    }
  }
  if (!slots.count(T))
    throw InvariantViolation("single-branch closure did not reach its quadrant bound");
  std::set<IVec> box;
  for (const auto& s : slots) box.insert(IVec{s.first});
  ValueSet out = makeValueSetFromBox(1, IVec{slots.begin()->first}, IVec{T}, std::move(box));
  if (out.lam != I.lam)
    throw InvariantViolation("single-branch closure missed the least generator value");
  out.validate();
  return out;
}

namespace {

SeriesVector capSV(const Field& K, SeriesVector g, const IVec& caps) {
  for (int j = 0; j < g.p(); ++j)
    if (g.comp[j].trunc() > caps[j]) g.comp[j] = tsTruncate(K, g.comp[j], caps[j]);
  return g;
}

// worklist closure of the generators under coordinate multiplication, keyed
// by the value along one branch only; witnesses with distinct keys span every
// value of the module in that projection (leading-term cancellation reveals
// the next key whenever two elements collide)
struct AxisClosure {
  std::map<int, SeriesVector> slots;  // axis value -> witness
  std::vector<SeriesVector> beyond;   // axis value above the window
};

AxisClosure closeAlongAxis(const Curve& C, const std::vector<SeriesVector>& gens,
                           int axis, int top, const IVec& caps) {
  const Field& K = C.K;
  AxisClosure out;
  const std::vector<SeriesVector> mults = C.coordFunctions();
  std::deque<SeriesVector> work;
  for (const SeriesVector& g : gens) work.push_back(capSV(K, g, caps));
  while (!work.empty()) {
    SeriesVector e = std::move(work.front());
    work.pop_front();
    while (true) {
      auto o = e.comp[axis].order(K);
      if (!o && e.comp[axis].trunc() <= top)
        throw TruncationError(
            "projection closure: an element vanishes to its truncation inside "
            "the value window");
      if (!o || *o > top) {
        bool someFinite = false;
        for (const TruncatedSeries& c : e.comp)
          if (c.order(K)) someFinite = true;
        if (someFinite) out.beyond.push_back(std::move(e));
        break;
      }
      auto it = out.slots.find(*o);
      if (it == out.slots.end()) {
        out.slots.emplace(*o, e);
        for (const SeriesVector& m : mults)
          work.push_back(capSV(K, svMulBranchwise(K, e, m), caps));
        break;
      }
      FieldElem ratio = K.div(e.comp[axis].at(K, *o), it->second.comp[axis].at(K, *o));
      e = svSub(K, e, svScale(K, it->second, ratio));
    }
  }
  return out;
}

bool allFinite(const Field& K, const SeriesVector& g) {
  for (const TruncatedSeries& c : g.comp)
    if (!c.order(K)) return false;
  return true;
}

// make sure some generator has finite order on every branch, adding a
// K-combination of the given ones when each is individually a zero divisor
void appendNzdCombination(const Field& K, std::vector<SeriesVector>& gens, const char* what) {
  for (const SeriesVector& g : gens)
    if (allFinite(K, g)) return;
  for (int k = 1; k <= 64; ++k) {
    SeriesVector cand = gens[0];
    long w = 1;
    for (size_t l = 1; l < gens.size(); ++l) {
      w *= k;
      cand = svAdd(K, cand, svScale(K, gens[l], K.fromInt(w)));
    }
    if (allFinite(K, cand)) {
      gens.push_back(std::move(cand));
      return;
    }
  }
  throw ComputationError(std::string(what) +
                         ": no combination of the generators avoids the zero divisors");
}

}  // namespace

ValueSet valueAlgoP2(const FractionalIdeal& I) {
  const Curve& C = *I.C;
  const Field& K = C.K;
  if (C.p != 2)
    throw InputError("the negative-window descent needs a curve with exactly two branches");
  // residue values of the individual branches, by single-branch machinery
  std::vector<ValueSet> branchRes;
  for (int j = 0; j < 2; ++j) {
    Curve B = C.branchCurve(j);
    FractionalIdeal kah = idealPreset(B, "kahler");
    ValueSet jac = shiftValueSet(valueAlgoP1(kah), B.gamma);
    branchRes.push_back(jac.dualBySymmetry(B.gamma));
  }
  const IVec top = ivMax(I.nu, ivConst(2, 0));
  const IVec caps = ivAdd(top, ivConst(2, 1));
  AxisClosure cl1 = closeAlongAxis(C, I.gens, 0, top[0], caps);
  AxisClosure cl2 = closeAlongAxis(C, I.gens, 1, top[1], caps);

  // every non-positive residue value of branch 1 appears among the
  // first-value projections of the module
  for (int v = std::min(branchRes[0].lam[0], 0); v <= 0; ++v)
    if (branchRes[0].member({v}) && !cl1.slots.count(v))
      throw InvariantViolation(
          "descent setup: a branch residue value is missing from the projection");

  // the column at first value 0: non-positive residue values of branch 2
  std::set<int> val2M;
  for (int v = std::min(branchRes[1].lam[0], 0); v <= 0; ++v)
    if (branchRes[1].member({v})) val2M.insert(v);
  // each of these appears at first value 0, hence in the second-value projection
  for (int v2 : val2M)
    if (!cl2.slots.count(v2))
      throw InvariantViolation(
          "descent setup: a branch residue value is missing from the second-value "
          "projection (the generators must generate the logarithmic residues)");
  std::set<IVec> M;
  for (int v2 : val2M) M.insert(IVec{0, v2});

  struct Wit {
    SeriesVector e;
    int floor;  // certified lower bound for the first value
  };
  std::map<int, Wit> wit2;  // second value -> witness with first value >= floor
  auto ord1 = [&](const SeriesVector& e) { return e.comp[0].order(K); };
  auto ord2 = [&](const SeriesVector& e) { return e.comp[1].order(K); };

  // an element with second value exactly w2 and first value >= minV1,
  // obtained by deterministic leading-term cancellations; failure is a hard
  // error, never a guess
  auto realize = [&](int w2, int minV1) -> SeriesVector {
    auto cached = wit2.find(w2);
    if (cached != wit2.end() && cached->second.floor >= minV1) return cached->second.e;
    SeriesVector sigma;
    int floorGot = caps[0];
    bool found = false;
    for (const SeriesVector& b : cl1.beyond) {
      auto o2 = ord2(b);
      if (o2 && *o2 == w2) {
        sigma = b;
        found = true;
        break;
      }
    }
    if (!found) {
      auto it = cl2.slots.find(w2);
      if (it == cl2.slots.end())
        throw ComputationError("descent: no element with the required second value was found");
      sigma = it->second;
      while (true) {
        auto o1 = ord1(sigma);
        if (!o1) break;  // first value beyond the window, large enough
        if (*o1 >= minV1) {
          floorGot = *o1;
          break;
        }
        auto sl = cl1.slots.find(*o1);
        if (sl == cl1.slots.end())
          throw ComputationError(
              "descent: a first value escaped the projection window during a cancellation");
        FieldElem c = K.div(sigma.comp[0].at(K, *o1), sl->second.comp[0].at(K, *o1));
        SeriesVector next = svSub(K, sigma, svScale(K, sl->second, c));
        auto n1 = ord1(next);
        if (n1 && *n1 <= *o1)
          throw InvariantViolation("descent: a cancellation failed to raise the first value");
        auto n2 = ord2(next);
        if (!n2 || *n2 != w2)
          throw ComputationError("descent: the deterministic cancellations lost the second value " +
                                 std::to_string(w2) + " (no convenient combination found)");
        sigma = std::move(next);
      }
    }
    wit2[w2] = Wit{sigma, floorGot};
    return sigma;
  };

  const int q = std::max(0, -std::min(I.lam[0], 0));
  for (int k = 1; k <= q; ++k) {
    const int v1 = -k;
    auto it = cl1.slots.find(v1);
    if (it == cl1.slots.end()) continue;  // -k is not a first value
    if (branchRes[0].member({v1})) {
      // -k is a residue value of branch 1 alone: the whole previous column
      // moves over
      for (int v2 : val2M) M.insert(IVec{v1, v2});
      continue;
    }
    // -k comes from the module but not from branch 1: descend from a witness
    SeriesVector rho = it->second;
    const std::set<int> stageVals = val2M;  // second values before this stage
    int guard = (int)stageVals.size() + (top[1] - std::min(I.lam[1], 0)) + 8;
    while (true) {
      if (--guard < 0)
        throw InvariantViolation("descent: the cancellation loop failed to terminate");
      auto o2 = ord2(rho);
      if (!o2 && rho.comp[1].trunc() <= 0)
        throw TruncationError("descent: the second component is known to too few terms");
      if (!o2 || *o2 > 0) {
        // the second value climbed past 0: every known column entry moves over
        for (int v2 : stageVals) M.insert(IVec{v1, v2});
        break;
      }
      const int w2 = *o2;
      if (!stageVals.count(w2)) {
        // a new second value appears at -k, together with the smaller ones
        M.insert(IVec{v1, w2});
        for (int v2 : stageVals)
          if (v2 <= w2) M.insert(IVec{v1, v2});
        val2M.insert(w2);
        wit2[w2] = Wit{rho, v1};
        break;
      }
      SeriesVector sub = realize(w2, v1 + 1);
      FieldElem c = K.div(rho.comp[1].at(K, w2), sub.comp[1].at(K, w2));
      rho = svSub(K, rho, svScale(K, sub, c));
      auto o1 = ord1(rho);
      if (!o1 || *o1 != v1)
        throw InvariantViolation("descent: the first value did not survive a cancellation");
    }
  }
  return negativeWindowReconstruct(2, M);
}

FractionalIdeal idealPreset(const Curve& C, const std::string& name) {
  const Field& K = C.K;
  const int p = C.p;
  if (name == "O_D") return makeIdeal(C, {C.one()});
  if (name == "O_Dtilde" || name == "conductor") {
    // the normalization is generated over O by one monomial run per branch;
    // the conductor is its translate by gamma
    const bool shifted = (name == "conductor");
    std::vector<SeriesVector> gens;
    for (int j = 0; j < p; ++j) {
      const int base = shifted ? C.gamma[j] : 0;
      for (int e = base; e <= base + C.gamma[j]; ++e)
        gens.push_back(svMonomialAt(K, p, j, K.one(), e));
    }
    gens.push_back(svUnitMonomial(K, shifted ? C.gamma : ivConst(p, 0)));
    return makeIdeal(C, gens);
  }
  if (name == "kahler") {
    std::vector<SeriesVector> gens;
    for (int l = 0; l < C.m; ++l) {
      SeriesVector d;
      d.comp.reserve(p);
      for (int j = 0; j < p; ++j) d.comp.push_back(tsDeriv(K, C.branches[j].coords[l]));
      gens.push_back(std::move(d));
    }
    appendNzdCombination(K, gens, "coordinate derivative module");
    return makeIdeal(C, gens);
  }
  if (name == "jacobian") {
    if (C.m == 2 && C.planeEquation) {
      Polynomial fx = C.planeEquation->diff(K, 0);
      Polynomial fy = C.planeEquation->diff(K, 1);
      auto evalAll = [&](const Polynomial& g) {
        SeriesVector sv;
        sv.comp.reserve(p);
        for (int j = 0; j < p; ++j) sv.comp.push_back(g.evalSeries(K, C.branches[j].coords));
        return sv;
      };
      std::vector<SeriesVector> gens = {evalAll(fx), evalAll(fy)};
      if (!allFinite(K, gens[0]) && !allFinite(K, gens[1])) {
        bool ok = false;
        for (int k = 1; k <= 64 && !ok; ++k) {
          SeriesVector cand = evalAll(polyAdd(K, fx, polyScale(K, fy, K.fromInt(k))));
          if (allFinite(K, cand)) {
            gens.push_back(std::move(cand));
            ok = true;
          }
        }
        if (!ok)
          throw ComputationError(
              "jacobian ideal: no combination of the partial derivatives is a "
              "non zero divisor");
      }
      return makeIdeal(C, gens);
    }
    // parametrized curves in higher-dimensional space: the values are
    // gamma + (values of the coordinate derivative module), so the translate
    // realizes the ideal at the value level
    FractionalIdeal kah = idealPreset(C, "kahler");
    std::vector<SeriesVector> gens;
    gens.reserve(kah.gens.size());
    for (const SeriesVector& g : kah.gens) gens.push_back(svShift(g, C.gamma));
    return makeIdeal(C, gens);
  }
  if (name == "residues") return dualDirect(idealPreset(C, "jacobian"));
  throw InputError("unknown ideal preset '" + name +
                   "' (expected O_D, O_Dtilde, conductor, kahler, jacobian, residues)");
}

}  // namespace logres
