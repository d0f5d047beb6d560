#include "logres/strata.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <tuple>

#include "logres/errors.hpp"
#include "logres/localalg.hpp"
#include "logres/residues.hpp"

namespace logres {

DeformationFamily makeFamily(const Field& K, Polynomial base,
                             std::vector<std::vector<int>> monomials) {
  if (base.nvars != 2)
    throw InputError("a deformation family needs a plane base polynomial");
  if (base.isZero()) throw InputError("the base polynomial is zero");
  for (auto& e : monomials) {
    if ((int)e.size() != 2)
      throw InputError("a deformation monomial needs one exponent per variable");
    if (e[0] < 0 || e[1] < 0)
      throw InputError("deformation monomial exponents must not be negative");
  }
  DeformationFamily F{K, std::move(base), std::move(monomials), std::nullopt};
  F.shape = detectSqhShape(K, F.base);
  if (F.shape) {
    long a = F.shape->a, b = F.shape->b;
    for (auto& e : F.monomials)
      if ((long)e[0] * b + (long)e[1] * a <= a * b)
        throw InputError(
            "a deformation monomial does not have strictly higher weight than "
            "the quasihomogeneous base, so the family may change topology");
  }
  return F;
}

Polynomial evaluateFamily(const DeformationFamily& F,
                          const std::vector<FieldElem>& point) {
  if (point.size() != F.monomials.size())
    throw InputError("the sample point needs one value per family parameter");
  Polynomial f = F.base;
  for (size_t k = 0; k < point.size(); ++k)
    f.addTerm(F.K, F.monomials[k], point[k]);
  return f;
}

SampleRecord analyzeSample(const DeformationFamily& F,
                           const std::vector<FieldElem>& point, int truncation,
                           const BranchParam* seed) {
  const Field& K = F.K;
  SampleRecord rec;
  rec.point = point;
  Polynomial f = evaluateFamily(F, point);
  if (f.isZero()) throw InputError("the family fiber is the zero polynomial");
  rec.tjurinaDirect = tjurinaDirect(K, f);

  int N = truncation;
  auto autoN = [](const SqhShape& s) { return 2 * (s.a - 1) * (s.b - 1) + 10; };
  std::optional<BranchParam> b;
  if (seed) {
    b = *seed;
    if (N <= 0) {
      auto sh = detectSqhShape(K, f);
      N = sh ? autoN(*sh) : 64;
    }
  } else {
    auto sh = detectSqhShape(K, f);
    if (!sh) {
      rec.note =
          "no parametrization: the fiber is not of the shape unit*x^a + "
          "unit*y^b + higher-weight terms";
      return rec;
    }
    if (N <= 0) N = autoN(*sh);
    b = sqhParametrize(K, f, N);
    if (!b) {
      rec.note = "no parametrization: the quasihomogeneous lift failed";
      return rec;
    }
  }

  for (int attempt = 0;; ++attempt) {
    try {
      Curve C = buildCurve(K, {*b}, {}, f, N);
      rec.delta = C.delta;
      rec.mu = C.mu;
      rec.mult = C.multiplicities()[0];
      ValueSet rv = residueValues(C);
      rec.negatives = nonPositiveValues(rv);
      ResidueDimensions dims = residueDimensions(C);
      rec.dimROverNormalization = dims.overNormalization;
      rec.tjurinaViaValues = C.delta + dims.overNormalization;
      rec.quasihomogeneous = quasihomogeneousJacobianCheck(C);
      rec.parametrized = true;
      return rec;
    } catch (const RaiseTruncation& r) {
      if (attempt >= 4)
        throw TruncationError(
            "the truncation kept growing while analyzing a family fiber");
      N = std::max(r.needed, N + 16);
      if (!seed) {
        b = sqhParametrize(K, f, N);
        if (!b)
          throw ComputationError(
              "the quasihomogeneous lift failed at a raised truncation");
      }
      // a caller-supplied seed with exact coordinates survives a retry;
      // buildCurve rejects it again if its coefficients run out
    }
  }
}

StrataReport scanStrata(const DeformationFamily& F,
                        const std::vector<std::vector<FieldElem>>& points,
                        int truncation, int threads,
                        const std::map<int, BranchParam>* seeds) {
  StrataReport rep;
  const int n = (int)points.size();
  rep.samples.resize(n);
  auto seedFor = [&](int i) -> const BranchParam* {
    if (!seeds) return nullptr;
    auto it = seeds->find(i);
    return it == seeds->end() ? nullptr : &it->second;
  };
  if (threads > 1 && n > 1) {
    // waves of bounded width; merge order stays the input order
    for (int base = 0; base < n; base += threads) {
      int end = std::min(n, base + threads);
      std::vector<std::future<SampleRecord>> futs;
      for (int i = base; i < end; ++i) {
        const std::vector<FieldElem>& pt = points[i];
        const BranchParam* sd = seedFor(i);
        futs.push_back(std::async(std::launch::async, [&F, pt, truncation, sd] {
          return analyzeSample(F, pt, truncation, sd);
        }));
      }
      for (int i = base; i < end; ++i) rep.samples[i] = futs[i - base].get();
    }
  } else {
    for (int i = 0; i < n; ++i)
      rep.samples[i] = analyzeSample(F, points[i], truncation, seedFor(i));
  }

  // group by (tjurina descending, parametrized first, negative rows)
  std::map<std::tuple<int, int, std::vector<IVec>>, StratumReport> groups;
  for (int i = 0; i < n; ++i) {
    const SampleRecord& r = rep.samples[i];
    auto key = std::make_tuple(-r.tjurinaDirect, r.parametrized ? 0 : 1,
                               r.negatives);
    StratumReport& g = groups[key];
    if (g.members.empty()) {
      g.tjurina = r.tjurinaDirect;
      g.parametrized = r.parametrized;
      g.negatives = r.negatives;
      g.dimROverNormalization = r.parametrized ? r.dimROverNormalization : -1;
    }
    g.members.push_back(i);
  }
  for (auto& [key, g] : groups) rep.strata.push_back(g);

  // flags
  int firstParam = -1;
  for (int i = 0; i < n; ++i) {
    const SampleRecord& r = rep.samples[i];
    if (!r.parametrized) continue;
    if (r.tjurinaViaValues != r.tjurinaDirect)
      rep.flags.push_back("sample " + std::to_string(i) +
                          ": the two Tjurina computations disagree");
    if (firstParam < 0) {
      firstParam = i;
    } else {
      const SampleRecord& f0 = rep.samples[firstParam];
      if (r.delta != f0.delta || r.mu != f0.mu || r.mult != f0.mult)
        rep.flags.push_back(
            "sample " + std::to_string(i) +
            ": delta, mu or multiplicity differs from sample " +
            std::to_string(firstParam) + "; the plan is not equisingular");
    }
  }
  std::map<int, int> parametrizedStrataPerTau;
  for (auto& g : rep.strata)
    if (g.parametrized) ++parametrizedStrataPerTau[g.tjurina];
  for (auto& [tau, count] : parametrizedStrataPerTau)
    if (count > 1)
      rep.flags.push_back("the stratum with tjurina " + std::to_string(tau) +
                          " splits into " + std::to_string(count) +
                          " residue strata");
  return rep;
}

}  // namespace logres
