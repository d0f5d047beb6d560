#include "logres/io.hpp"

#include <algorithm>
#include <sstream>

#include "logres/localalg.hpp"

namespace logres {

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw InputError(ctx.empty() ? msg : ctx + ": " + msg);
}

int asInt(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) fail(ctx, "expected an integer");
  return j.get<int>();
}

std::string asString(const Json& j, const std::string& ctx) {
  if (!j.is_string()) fail(ctx, "expected a string");
  return j.get<std::string>();
}

int parseExponentKey(const std::string& key, const std::string& ctx) {
  size_t pos = 0;
  int e = 0;
  try {
    e = std::stoi(key, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != key.size()) fail(ctx, "bad exponent key '" + key + "'");
  return e;
}

IVec parseIVec(const Json& j, const std::string& ctx, int want = -1) {
  if (!j.is_array()) fail(ctx, "expected an array of integers");
  IVec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(asInt(x, ctx));
  if (want >= 0 && (int)v.size() != want)
    fail(ctx, "expected " + std::to_string(want) + " entries, got " +
                  std::to_string(v.size()));
  return v;
}

Json emitIVec(const IVec& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

// shared by explicit curve branches and per-sample seeds in plans
std::vector<TruncatedSeries> parseBranchCoords(const Field& K, const Json& b,
                                               const std::string& ctx) {
  std::vector<TruncatedSeries> coords;
  if (b.contains("coords")) {
    const Json& cj = b["coords"];
    if (!cj.is_array() || cj.empty()) fail(ctx + ".coords", "expected a nonempty array");
    for (size_t l = 0; l < cj.size(); ++l)
      coords.push_back(parseSeries(K, cj[l], ctx + ".coords[" + std::to_string(l) + "]"));
    return coords;
  }
  static const char* names[] = {"x", "y", "z", "w"};
  int cnt = 0;
  while (cnt < 4 && b.contains(names[cnt])) ++cnt;
  for (int l = cnt; l < 4; ++l)
    if (b.contains(names[l]))
      fail(ctx, std::string("coordinate '") + names[l] +
                    "' given without the preceding ones; use x, y, z, w in order");
  if (cnt == 0)
    fail(ctx, "expected coordinate series (\"x\", \"y\", ...), a \"coords\" array "
              "or a \"seed\"");
  for (int l = 0; l < cnt; ++l)
    coords.push_back(parseSeries(K, b[names[l]], ctx + "." + names[l]));
  return coords;
}

std::string lvlName(VerifyLevel lvl) {
  switch (lvl) {
    case VerifyLevel::None: return "none";
    case VerifyLevel::CrossCheck: return "cross-check";
    default: return "full";
  }
}

}  // namespace

VerifyLevel parseVerifyLevel(const std::string& s) {
  if (s == "none") return VerifyLevel::None;
  if (s == "cross-check") return VerifyLevel::CrossCheck;
  if (s == "full") return VerifyLevel::Full;
  throw InputError("unknown verification level '" + s +
                   "' (expected none, cross-check or full)");
}

// ---- scalars and containers -------------------------------------------------

Json emitRat(const Rat& r) { return Json(ratToString(r)); }

Rat parseRat(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return ratFromString(j.get<std::string>());
    } catch (const InputError& e) {
      fail(ctx, e.what());
    }
  }
  fail(ctx, "expected a rational as a string \"p/q\" or an integer");
}

Json emitFieldElem(const Field& K, const FieldElem& a) {
  if (K.deg() == 1) return emitRat(a[0]);
  Json arr = Json::array();
  for (const Rat& c : a) arr.push_back(emitRat(c));
  return arr;
}

FieldElem parseFieldElem(const Field& K, const Json& j, const std::string& ctx) {
  if (j.is_array()) {
    if ((int)j.size() != K.deg())
      fail(ctx, "expected " + std::to_string(K.deg()) +
                    " coordinates for an element of this field");
    FieldElem a = K.zero();
    for (size_t i = 0; i < j.size(); ++i)
      a[i] = parseRat(j[i], ctx + "[" + std::to_string(i) + "]");
    return a;
  }
  return K.fromRat(parseRat(j, ctx));
}

Json emitFieldSpec(const FieldSpec& s) {
  Json mp = Json::array();
  for (const Rat& c : s.minPoly) mp.push_back(emitRat(c));
  Json r = Json::object();
  r["min_poly"] = std::move(mp);
  return r;
}

Field parseField(const Json& j) {
  if (j.is_null()) return Field(FieldSpec::rationals());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q" || s == "rationals") return Field(FieldSpec::rationals());
    fail("field", "unknown field name '" + s + "'");
  }
  if (!j.is_object()) fail("field", "expected {\"min_poly\": [...]} or null");
  if (!j.contains("min_poly")) return Field(FieldSpec::rationals());
  const Json& mp = j["min_poly"];
  if (!mp.is_array() || mp.size() < 2)
    fail("field.min_poly", "expected at least two coefficients c0, ..., 1");
  FieldSpec spec;
  for (size_t i = 0; i < mp.size(); ++i)
    spec.minPoly.push_back(parseRat(mp[i], "field.min_poly[" + std::to_string(i) + "]"));
  return Field(spec);  // validates monicity and irreducibility
}

Json emitSeries(const Field& K, const TruncatedSeries& s) {
  Json co = Json::object();
  const auto& v = s.coef();
  for (int i = 0; i < (int)v.size(); ++i)
    if (!K.isZero(v[i])) co[std::to_string(s.minExp() + i)] = emitFieldElem(K, v[i]);
  Json r = Json::object();
  r["min_exp"] = s.minExp();
  r["trunc"] = s.exact() ? Json(nullptr) : Json(s.trunc());
  r["coeffs"] = std::move(co);
  return r;
}

TruncatedSeries parseSeries(const Field& K, const Json& j, const std::string& ctx) {
  if (j.is_string() || j.is_number_integer()) {  // shorthand: exact constant
    FieldElem c = parseFieldElem(K, j, ctx);
    if (K.isZero(c)) return TruncatedSeries();
    return TruncatedSeries::monomial(K, c, 0);
  }
  if (!j.is_object()) fail(ctx, "expected a series object");
  int trunc = TruncatedSeries::EXACT;
  if (j.contains("trunc") && !j["trunc"].is_null()) {
    trunc = asInt(j["trunc"], ctx + ".trunc");
    if (trunc <= -(TruncatedSeries::EXACT / 2) || trunc >= TruncatedSeries::EXACT)
      fail(ctx + ".trunc", "truncation order out of range");
  }
  std::map<int, FieldElem> terms;
  if (j.contains("coeffs")) {
    const Json& co = j["coeffs"];
    if (!co.is_object()) fail(ctx + ".coeffs", "expected {\"exponent\": coefficient, ...}");
    for (auto it = co.begin(); it != co.end(); ++it) {
      int e = parseExponentKey(it.key(), ctx + ".coeffs");
      if (trunc != TruncatedSeries::EXACT && e >= trunc)
        fail(ctx + ".coeffs",
             "coefficient at t^" + std::to_string(e) + " is not below the truncation order " +
                 std::to_string(trunc));
      FieldElem c = parseFieldElem(K, it.value(), ctx + ".coeffs[" + it.key() + "]");
      if (!K.isZero(c)) terms[e] = c;
    }
  }
  int minExp = j.contains("min_exp") ? asInt(j["min_exp"], ctx + ".min_exp")
                                     : (terms.empty() ? 0 : terms.begin()->first);
  if (!terms.empty() && terms.begin()->first < minExp)
    fail(ctx, "a coefficient exponent lies below min_exp");
  if (terms.empty())
    return trunc == TruncatedSeries::EXACT ? TruncatedSeries()
                                           : TruncatedSeries::zeroKnownTo(trunc);
  int maxExp = terms.rbegin()->first;
  std::vector<FieldElem> coef((size_t)(maxExp - minExp + 1), K.zero());
  for (const auto& [e, c] : terms) coef[(size_t)(e - minExp)] = c;
  return TruncatedSeries(minExp, trunc, std::move(coef));
}

Json emitSeriesVector(const Field& K, const SeriesVector& v) {
  Json arr = Json::array();
  for (const TruncatedSeries& s : v.comp) arr.push_back(emitSeries(K, s));
  return arr;
}

SeriesVector parseSeriesVector(const Field& K, const Json& j, const std::string& ctx) {
  SeriesVector v;
  if (j.is_array()) {
    if (j.empty()) fail(ctx, "expected a nonempty array of series");
    for (size_t i = 0; i < j.size(); ++i)
      v.comp.push_back(parseSeries(K, j[i], ctx + "[" + std::to_string(i) + "]"));
  } else {
    v.comp.push_back(parseSeries(K, j, ctx));  // single component shorthand
  }
  return v;
}

Json emitPolynomial(const Field& K, const Polynomial& f) {
  Json arr = Json::array();
  for (const auto& [e, c] : f.terms) {
    Json t = Json::object();
    t["coeff"] = emitFieldElem(K, c);
    t["exps"] = emitIVec(e);
    arr.push_back(std::move(t));
  }
  return arr;
}

Polynomial parsePolynomial(const Field& K, const Json& j, int nvars,
                           const std::string& ctx) {
  if (!j.is_array()) fail(ctx, "expected an array of {\"coeff\", \"exps\"} terms");
  int nv = nvars;
  std::vector<std::pair<std::vector<int>, FieldElem>> terms;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& t = j[i];
    std::string tctx = ctx + "[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
      fail(tctx, "expected {\"coeff\": ..., \"exps\": [...]}");
    IVec e = parseIVec(t["exps"], tctx + ".exps", nv);
    for (int x : e)
      if (x < 0) fail(tctx + ".exps", "negative exponent");
    if (nv <= 0) nv = (int)e.size();
    terms.emplace_back(std::move(e), parseFieldElem(K, t["coeff"], tctx + ".coeff"));
  }
  if (nv <= 0) fail(ctx, "cannot infer the variable count of an empty polynomial");
  Polynomial f = Polynomial::zero(nv);
  for (const auto& [e, c] : terms) f.addTerm(K, e, c);
  return f;
}

Json emitValueSet(const ValueSet& s) {
  Json r = Json::object();
  r["lambda"] = emitIVec(s.lam);
  r["nu"] = emitIVec(s.nu);
  Json bx = Json::array();
  for (const IVec& v : s.box) bx.push_back(emitIVec(v));
  r["box"] = std::move(bx);
  return r;
}

ValueSet parseValueSet(const Json& j, const std::string& ctx) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("nu") || !j.contains("box"))
    fail(ctx, "expected {\"lambda\": [...], \"nu\": [...], \"box\": [[...], ...]}");
  ValueSet s;
  s.lam = parseIVec(j["lambda"], ctx + ".lambda");
  s.p = (int)s.lam.size();
  s.nu = parseIVec(j["nu"], ctx + ".nu", s.p);
  if (!j["box"].is_array()) fail(ctx + ".box", "expected an array");
  for (const Json& v : j["box"]) s.box.insert(parseIVec(v, ctx + ".box", s.p));
  try {
    s.validate();
  } catch (const std::exception& e) {
    fail(ctx, e.what());
  }
  return s;
}

Json emitMultiVal(const MultiVal& w) {
  Json a = Json::array();
  for (const auto& x : w.v) a.push_back(x ? Json(*x) : Json(nullptr));
  return a;
}

Json emitLaurent(const LaurentPoly& P) {
  Json arr = Json::array();  // std::map iteration is already lexicographic
  for (const auto& [e, c] : P.terms) {
    Json t = Json::object();
    t["exps"] = emitIVec(e);
    t["coeff"] = c;
    arr.push_back(std::move(t));
  }
  Json r = Json::object();
  r["terms"] = std::move(arr);
  return r;
}

LaurentPoly parseLaurent(const Json& j, const std::string& ctx) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ctx, "expected {\"terms\": [{\"exps\": [...], \"coeff\": n}, ...]}");
  LaurentPoly P;
  for (size_t i = 0; i < j["terms"].size(); ++i) {
    const Json& t = j["terms"][i];
    std::string tctx = ctx + ".terms[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
      fail(tctx, "expected {\"exps\": [...], \"coeff\": n}");
    IVec e = parseIVec(t["exps"], tctx + ".exps", P.p > 0 ? P.p : -1);
    if (P.p == 0) P.p = (int)e.size();
    int c = asInt(t["coeff"], tctx + ".coeff");
    if (c != 0) P.terms[e] += c;
  }
  return P;
}

// ---- curve and ideal inputs ---------------------------------------------------

Curve parseCurve(const Json& j, int truncationOverride) {
  const Json* doc = &j;
  if (j.is_object() && j.contains("curve")) doc = &j["curve"];
  if (!doc->is_object()) fail("curve", "expected an object");
  const Json& c = *doc;

  Field K = c.contains("field") ? parseField(c["field"]) : Field(FieldSpec::rationals());
  int N0 = 64;
  if (truncationOverride > 0) {
    N0 = truncationOverride;
  } else if (c.contains("truncation") && !c["truncation"].is_null()) {
    N0 = asInt(c["truncation"], "truncation");
    if (N0 < 1) fail("truncation", "must be positive");
  }

  if (!c.contains("branches") || !c["branches"].is_array() || c["branches"].empty())
    fail("branches", "expected a nonempty array");
  struct BrDesc {
    bool isSeed = false;
    BranchParam param;
    BranchSeed seed;
    int eqIndex = -1;
  };
  std::vector<BrDesc> descs;
  int m = -1;
  const Json& bj = c["branches"];
  for (size_t i = 0; i < bj.size(); ++i) {
    const Json& b = bj[i];
    std::string ctx = "branches[" + std::to_string(i) + "]";
    if (!b.is_object()) fail(ctx, "expected an object");
    BrDesc d;
    int coordCount = 0;
    if (b.contains("seed")) {
      d.isSeed = true;
      const Json& sd = b["seed"];
      if (!sd.is_array() || sd.empty())
        fail(ctx + ".seed", "expected an array of per-coordinate term maps");
      for (size_t l = 0; l < sd.size(); ++l) {
        const Json& cm = sd[l];
        std::string sctx = ctx + ".seed[" + std::to_string(l) + "]";
        if (!cm.is_object()) fail(sctx, "expected {\"exponent\": coefficient, ...}");
        std::map<int, FieldElem> terms;
        for (auto it = cm.begin(); it != cm.end(); ++it) {
          int e = parseExponentKey(it.key(), sctx);
          terms[e] = parseFieldElem(K, it.value(), sctx + "[" + it.key() + "]");
        }
        d.seed.coordTerms.push_back(std::move(terms));
      }
      if (b.contains("lift_coord"))
        d.seed.liftCoord = asInt(b["lift_coord"], ctx + ".lift_coord");
      d.eqIndex = b.contains("equation_index")
                      ? asInt(b["equation_index"], ctx + ".equation_index")
                      : (int)i;
      coordCount = (int)d.seed.coordTerms.size();
    } else {
      d.param.coords = parseBranchCoords(K, b, ctx);
      coordCount = (int)d.param.coords.size();
    }
    if (m < 0) m = coordCount;
    if (coordCount != m)
      fail(ctx, "expected " + std::to_string(m) + " coordinates like the first branch");
    descs.push_back(std::move(d));
  }
  const int p = (int)descs.size();

  std::vector<Polynomial> eqs;
  if (c.contains("equations") && !c["equations"].is_null()) {
    const Json& ej = c["equations"];
    if (!ej.is_array()) fail("equations", "expected an array of polynomials");
    for (size_t i = 0; i < ej.size(); ++i)
      eqs.push_back(parsePolynomial(K, ej[i], m, "equations[" + std::to_string(i) + "]"));
  }
  if (!eqs.empty() && (int)eqs.size() != p)
    fail("equations", "expected one equation per branch (" + std::to_string(p) +
                          "), got " + std::to_string(eqs.size()));
  std::optional<Polynomial> plane;
  if (c.contains("plane_equation") && !c["plane_equation"].is_null())
    plane = parsePolynomial(K, c["plane_equation"], m, "plane_equation");
  for (size_t i = 0; i < descs.size(); ++i)
    if (descs[i].isSeed && (descs[i].eqIndex < 0 || descs[i].eqIndex >= (int)eqs.size()))
      fail("branches[" + std::to_string(i) + "]",
           "a seed branch needs a valid equation_index into \"equations\"");

  // build, relifting seeds / reusing exact data when more precision is needed
  int N = N0;
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<BranchParam> brs;
      brs.reserve(descs.size());
      for (const BrDesc& d : descs)
        brs.push_back(d.isSeed ? henselLiftBranch(K, eqs[(size_t)d.eqIndex], d.seed, N)
                               : d.param);
      return buildCurve(K, std::move(brs), eqs, plane, N);
    } catch (const RaiseTruncation& e) {
      if (attempt >= 5)
        throw TruncationError("the computation still lacks precision after relifting "
                              "(needs coefficients up to t^" +
                              std::to_string(e.needed) + ")");
      int next = std::max(e.needed, N + 16);
      for (const BrDesc& d : descs) {
        if (d.isSeed) continue;
        for (const TruncatedSeries& s : d.param.coords)
          if (!s.exact() && s.trunc() < next)
            throw TruncationError(
                "a branch series is only given below t^" + std::to_string(s.trunc()) +
                " but the computation needs coefficients up to t^" + std::to_string(next) +
                "; supply more terms or lower the truncation");
      }
      N = next;
    }
  }
}

FractionalIdeal parseIdeal(const Curve& C, const Json& j) {
  if (j.is_string()) return idealPreset(C, j.get<std::string>());
  if (j.is_object()) {
    if (j.contains("preset")) return idealPreset(C, asString(j["preset"], "ideal.preset"));
    if (j.contains("generators")) {
      const Json& g = j["generators"];
      if (!g.is_array() || g.empty())
        fail("ideal.generators", "expected a nonempty array");
      std::vector<SeriesVector> gens;
      for (size_t i = 0; i < g.size(); ++i) {
        std::string ctx = "ideal.generators[" + std::to_string(i) + "]";
        SeriesVector v = parseSeriesVector(C.K, g[i], ctx);
        if (v.p() != C.p)
          fail(ctx, "expected " + std::to_string(C.p) +
                        " components (one per branch), got " + std::to_string(v.p()));
        gens.push_back(std::move(v));
      }
      return makeIdeal(C, std::move(gens));
    }
  }
  throw InputError(
      "ideal: expected a preset name or {\"generators\": [series vector, ...]}");
}

// ---- deformation plans --------------------------------------------------------

StrataPlan parsePlan(const Json& j, int truncationOverride) {
  if (!j.is_object()) fail("plan", "expected an object");
  if (!j.contains("family") || !j["family"].is_object())
    fail("family", "expected an object");
  const Json& fj = j["family"];
  Field K = fj.contains("field") ? parseField(fj["field"]) : Field(FieldSpec::rationals());
  if (!fj.contains("base")) fail("family.base", "missing");
  Polynomial base = parsePolynomial(K, fj["base"], 2, "family.base");
  std::vector<std::vector<int>> mons;
  if (fj.contains("monomials")) {
    const Json& mj = fj["monomials"];
    if (!mj.is_array()) fail("family.monomials", "expected an array of exponent pairs");
    for (size_t i = 0; i < mj.size(); ++i)
      mons.push_back(parseIVec(mj[i], "family.monomials[" + std::to_string(i) + "]", 2));
  }
  const int k = (int)mons.size();

  StrataPlan plan{K, makeFamily(K, std::move(base), std::move(mons)), {}, {}, 0};
  if (truncationOverride > 0) {
    plan.truncation = truncationOverride;
  } else if (j.contains("truncation") && !j["truncation"].is_null()) {
    plan.truncation = asInt(j["truncation"], "truncation");
    if (plan.truncation < 1) fail("truncation", "must be positive");
  }

  if (!j.contains("samples")) fail("samples", "missing");
  const Json& sj = j["samples"];
  if (sj.is_array()) {
    for (size_t i = 0; i < sj.size(); ++i) {
      const Json& pt = sj[i];
      std::string ctx = "samples[" + std::to_string(i) + "]";
      if (!pt.is_array() || (int)pt.size() != k)
        fail(ctx, "expected " + std::to_string(k) + " parameter values");
      std::vector<FieldElem> point;
      for (size_t l = 0; l < pt.size(); ++l)
        point.push_back(parseFieldElem(K, pt[l], ctx + "[" + std::to_string(l) + "]"));
      plan.points.push_back(std::move(point));
    }
  } else if (sj.is_object() && sj.contains("grid")) {
    const Json& gj = sj["grid"];
    if (!gj.is_array() || (int)gj.size() != k)
      fail("samples.grid", "expected one value list per parameter (" +
                               std::to_string(k) + ")");
    std::vector<std::vector<FieldElem>> axes;
    size_t total = 1;
    for (size_t l = 0; l < gj.size(); ++l) {
      const Json& axis = gj[l];
      std::string ctx = "samples.grid[" + std::to_string(l) + "]";
      if (!axis.is_array() || axis.empty()) fail(ctx, "expected a nonempty value list");
      std::vector<FieldElem> vals;
      for (size_t t = 0; t < axis.size(); ++t)
        vals.push_back(parseFieldElem(K, axis[t], ctx + "[" + std::to_string(t) + "]"));
      total *= vals.size();
      if (total > 4096) fail("samples.grid", "grid holds more than 4096 points");
      axes.push_back(std::move(vals));
    }
    // cartesian product, first parameter slowest
    for (size_t idx = 0; idx < total; ++idx) {
      std::vector<FieldElem> point(axes.size(), K.zero());
      size_t rest = idx;
      for (size_t l = axes.size(); l-- > 0;) {
        point[l] = axes[l][rest % axes[l].size()];
        rest /= axes[l].size();
      }
      plan.points.push_back(std::move(point));
    }
  } else {
    fail("samples", "expected an array of points or {\"grid\": [...]}");
  }

  if (j.contains("seeds") && !j["seeds"].is_null()) {
    const Json& dj = j["seeds"];
    if (!dj.is_object())
      fail("seeds", "expected {\"<sample index>\": branch, ...}");
    for (auto it = dj.begin(); it != dj.end(); ++it) {
      int idx = parseExponentKey(it.key(), "seeds");
      if (idx < 0 || idx >= (int)plan.points.size())
        fail("seeds", "sample index " + it.key() + " out of range");
      BranchParam bp;
      bp.coords = parseBranchCoords(K, it.value(), "seeds[" + it.key() + "]");
      plan.seeds.emplace(idx, std::move(bp));
    }
  }
  return plan;
}

// ---- reports --------------------------------------------------------------------

Json analyzeReport(const Curve& C, VerifyLevel lvl, int dmax) {
  Json r = Json::object();
  r["kind"] = "analyze";
  r["field"] = emitFieldSpec(C.K.spec());
  r["branches"] = C.p;
  r["ambient"] = C.m;
  r["truncation"] = C.N;
  r["multiplicities"] = emitIVec(C.multiplicities());
  r["gamma"] = emitIVec(C.gamma);
  r["delta"] = C.delta;
  r["mu"] = C.mu;
  const int tv = tjurinaViaValues(C);
  r["tjurina_via_values"] = tv;
  r["tjurina_direct"] =
      C.planeEquation ? Json(tjurinaDirect(C.K, *C.planeEquation, dmax)) : Json(nullptr);
  r["semigroup"] = emitValueSet(C.valO);
  r["semigroup_symmetric"] = semigroupSymmetric(C);
  r["kahler_values"] = emitValueSet(kahlerValues(C));
  FractionalIdeal J = idealPreset(C, "jacobian");
  r["jacobian_values"] = emitValueSet(idealValues(J));
  ValueSet R = residueValues(C);
  r["residue_values"] = emitValueSet(R);
  Json zd = Json::array();
  for (const MultiVal& w : C.valO.zeroDivisorValuesInBox()) zd.push_back(emitMultiVal(w));
  r["zero_divisor_values"] = std::move(zd);
  Json neg = Json::array();
  for (const IVec& v : nonPositiveValues(R)) neg.push_back(emitIVec(v));
  r["negative_residue_values"] = std::move(neg);
  ResidueDimensions rd = residueDimensions(C);
  r["dim_R_over_ring"] = rd.overRing;
  r["dim_R_over_normalization"] = rd.overNormalization;
  r["dim_normalization_over_ring"] = rd.normalizationOverRing;
  r["quasihomogeneous"] = quasihomogeneousJacobianCheck(C);
  r["verify"] = lvlName(lvl);

  Json checks = Json::object();
  if (lvl >= VerifyLevel::CrossCheck) {
    if (C.mu != 2 * C.delta - C.p + 1)
      throw InvariantViolation("mu does not equal 2*delta - p + 1");
    checks["milnor_formula"] = true;
    if (C.planeEquation) {
      const int md = milnorDirect(C.K, *C.planeEquation, dmax);
      if (md != C.mu)
        throw InvariantViolation("the Jacobian-quotient Milnor number (" +
                                 std::to_string(md) + ") differs from the value-theoretic one (" +
                                 std::to_string(C.mu) + ")");
      checks["milnor_direct_agreement"] = true;
      const int td = r["tjurina_direct"].get<int>();
      if (td != tv)
        throw InvariantViolation("the two Tjurina computations disagree: direct " +
                                 std::to_string(td) + " vs values " + std::to_string(tv));
      checks["tjurina_agreement"] = true;
      if (C.m == 2) {
        partialValueIdentities(C);  // throws on violation
        checks["partial_value_identities"] = true;
      }
    }
    branchResidueInclusionCheck(C);  // throws on violation
    checks["branch_residue_inclusion"] = true;
  }
  if (lvl >= VerifyLevel::Full) {
    for (const char* name : {"O_Dtilde", "jacobian"}) {
      FractionalIdeal I = idealPreset(C, name);
      ValueSet sym = dualValuesSymmetry(I);
      FractionalIdeal D = dualDirect(I);
      if (!sameMembership(sym, idealValues(D)))
        throw InvariantViolation(std::string("the symmetry dual and the direct dual of the ") +
                                 name + " ideal disagree");
      FractionalIdeal DD = dualDirect(D);
      if (!sameMembership(idealValues(DD), idealValues(I)))
        throw InvariantViolation(std::string("the double dual of the ") + name +
                                 " ideal does not reproduce its values");
    }
    checks["dual_symmetry_vs_direct"] = true;
    checks["double_dual"] = true;
    for (const char* name : {"O_D", "residues"}) {
      FractionalIdeal I = idealPreset(C, name);
      PoincareSymmetryReport rep = poincareSymmetryCheck(I);
      if (!rep.ok)
        throw InvariantViolation(std::string("the Poincare symmetry fails for the ") + name +
                                 " ideal: " + rep.diff);
    }
    checks["poincare_symmetry"] = true;
    if (C.p <= 2) {
      FractionalIdeal I = idealPreset(C, "O_D");
      ValueSet alt = C.p == 1 ? valueAlgoP1(I) : valueAlgoP2(I);
      if (!sameMembership(alt, idealValues(I)))
        throw InvariantViolation(
            "the specialised value-set algorithm disagrees with the rank oracle");
      checks["value_algorithm"] = true;
    }
  }
  r["checks"] = std::move(checks);
  return r;
}

Json dualReport(const Curve& C, const Json& idealSpec, VerifyLevel lvl) {
  FractionalIdeal I = parseIdeal(C, idealSpec);
  Json r = Json::object();
  r["kind"] = "dual";
  r["ideal"] = idealSpec;
  r["gamma"] = emitIVec(C.gamma);
  const ValueSet& vals = idealValues(I);
  r["values"] = emitValueSet(vals);
  ValueSet dv = dualValuesSymmetry(I);
  r["dual_values"] = emitValueSet(dv);
  r["verify"] = lvlName(lvl);
  Json checks = Json::object();
  if (lvl >= VerifyLevel::CrossCheck) {
    FractionalIdeal D = dualDirect(I);
    if (!sameMembership(idealValues(D), dv))
      throw InvariantViolation("the direct dual disagrees with the symmetry dual");
    checks["direct_agreement"] = true;
    if (lvl >= VerifyLevel::Full) {
      FractionalIdeal DD = dualDirect(D);
      if (!sameMembership(idealValues(DD), vals))
        throw InvariantViolation("the double dual does not reproduce the ideal's values");
      checks["double_dual"] = true;
    }
  }
  r["checks"] = std::move(checks);
  return r;
}

Json poincareReport(const Curve& C, const Json& idealSpec) {
  FractionalIdeal I = parseIdeal(C, idealSpec);
  PoincareSymmetryReport rep = poincareSymmetryCheck(I);
  Json r = Json::object();
  r["kind"] = "poincare";
  r["ideal"] = idealSpec;
  r["gamma"] = emitIVec(C.gamma);
  r["poly"] = emitLaurent(rep.poly);
  r["poly_string"] = lpStr(rep.poly);
  r["dual_poly"] = emitLaurent(rep.dualPoly);
  r["dual_poly_string"] = lpStr(rep.dualPoly);
  r["symmetric"] = rep.ok;
  if (!rep.ok) r["diff"] = rep.diff;
  return r;
}

Json strataReport(const StrataPlan& plan, const StrataReport& scan) {
  const Field& K = plan.K;
  Json r = Json::object();
  r["kind"] = "strata";
  r["parameters"] = (int)plan.family.monomials.size();
  Json samples = Json::array();
  for (const SampleRecord& s : scan.samples) {
    Json o = Json::object();
    Json pt = Json::array();
    for (const FieldElem& c : s.point) pt.push_back(emitFieldElem(K, c));
    o["point"] = std::move(pt);
    o["tjurina_direct"] = s.tjurinaDirect;
    o["parametrized"] = s.parametrized;
    if (!s.note.empty()) o["note"] = s.note;
    if (s.parametrized) {
      o["delta"] = s.delta;
      o["mu"] = s.mu;
      o["multiplicity"] = s.mult;
      o["tjurina_via_values"] = s.tjurinaViaValues;
      o["dim_R_over_normalization"] = s.dimROverNormalization;
      Json neg = Json::array();
      for (const IVec& v : s.negatives) neg.push_back(emitIVec(v));
      o["negative_residue_values"] = std::move(neg);
      o["quasihomogeneous"] = s.quasihomogeneous;
    }
    samples.push_back(std::move(o));
  }
  r["samples"] = std::move(samples);

  std::map<int, int> tjurinaMultiplicity, seen;
  for (const StratumReport& st : scan.strata) tjurinaMultiplicity[st.tjurina]++;
  Json strata = Json::array();
  for (const StratumReport& st : scan.strata) {
    Json o = Json::object();
    std::string label = "S" + std::to_string(st.tjurina);
    if (tjurinaMultiplicity[st.tjurina] > 1)
      label += std::string((size_t)(seen[st.tjurina]++ + 1), '\'');
    o["stratum"] = label;
    o["tjurina"] = st.tjurina;
    o["parametrized"] = st.parametrized;
    o["dim"] = st.dimROverNormalization >= 0 ? Json(st.dimROverNormalization) : Json(nullptr);
    Json neg = Json::array();
    for (const IVec& v : st.negatives) neg.push_back(emitIVec(v));
    o["negative_values"] = std::move(neg);
    o["members"] = Json(st.members);
    strata.push_back(std::move(o));
  }
  r["strata"] = std::move(strata);
  r["flags"] = Json(scan.flags);
  return r;
}

// ---- markdown rendering -----------------------------------------------------------

namespace {

std::string ivecStr(const Json& v) {
  if (v.size() == 1 && !v[0].is_null()) return std::to_string(v[0].get<int>());
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].is_null() ? std::string("inf") : std::to_string(v[i].get<int>());
  }
  return s + ")";
}

// rows of value tuples; single-branch rows are rendered largest-first, the way
// the published tables list them
std::string rowsStr(const Json& arr, bool reverseScalars) {
  if (arr.empty()) return "none";
  const bool scalar = arr[0].size() == 1;
  std::string s;
  auto append = [&](const Json& v) {
    if (!s.empty()) s += scalar ? ", " : "; ";
    s += ivecStr(v);
  };
  if (scalar && reverseScalars)
    for (size_t i = arr.size(); i-- > 0;) append(arr[i]);
  else
    for (const Json& v : arr) append(v);
  return s;
}

std::string valueSetStr(const Json& vs) {
  std::string s = "lambda " + ivecStr(vs["lambda"]) + ", nu " + ivecStr(vs["nu"]);
  const Json& box = vs["box"];
  if (box.size() <= 48) {
    s += ", box {" + rowsStr(box, false) + "}";
  } else {
    s += ", " + std::to_string(box.size()) + " box values";
  }
  return s;
}

std::string checksStr(const Json& checks) {
  if (checks.empty()) return "none requested";
  std::string s;
  for (auto it = checks.begin(); it != checks.end(); ++it) {
    if (!s.empty()) s += ", ";
    s += it.key();
  }
  return s;
}

std::string yesNo(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

}  // namespace

std::string analyzeMarkdown(const Json& r) {
  std::ostringstream o;
  o << "# Curve analysis\n\n";
  o << "| invariant | value |\n| --- | --- |\n";
  o << "| branches (p) | " << r["branches"].get<int>() << " |\n";
  o << "| ambient coordinates (m) | " << r["ambient"].get<int>() << " |\n";
  o << "| multiplicities | " << ivecStr(r["multiplicities"]) << " |\n";
  o << "| conductor exponent (gamma) | " << ivecStr(r["gamma"]) << " |\n";
  o << "| delta | " << r["delta"].get<int>() << " |\n";
  o << "| mu | " << r["mu"].get<int>() << " |\n";
  o << "| tjurina (via values) | " << r["tjurina_via_values"].get<int>() << " |\n";
  if (!r["tjurina_direct"].is_null())
    o << "| tjurina (direct) | " << r["tjurina_direct"].get<int>() << " |\n";
  o << "| dim R / ring | " << r["dim_R_over_ring"].get<int>() << " |\n";
  o << "| dim R / normalization | " << r["dim_R_over_normalization"].get<int>() << " |\n";
  o << "| dim normalization / ring | " << r["dim_normalization_over_ring"].get<int>()
    << " |\n";
  o << "| semigroup symmetric | " << yesNo(r["semigroup_symmetric"]) << " |\n";
  o << "| quasihomogeneous | " << yesNo(r["quasihomogeneous"]) << " |\n\n";
  o << "Semigroup: " << valueSetStr(r["semigroup"]) << "\n\n";
  o << "Kaehler differential values: " << valueSetStr(r["kahler_values"]) << "\n\n";
  o << "Jacobian values: " << valueSetStr(r["jacobian_values"]) << "\n\n";
  o << "Residue values: " << valueSetStr(r["residue_values"]) << "\n\n";
  o << "Negative residue values: " << rowsStr(r["negative_residue_values"], true) << "\n\n";
  o << "Zero-divisor values: " << rowsStr(r["zero_divisor_values"], false) << "\n\n";
  o << "Checks passed (" << r["verify"].get<std::string>()
    << "): " << checksStr(r["checks"]) << "\n";
  return o.str();
}

std::string dualMarkdown(const Json& r) {
  std::ostringstream o;
  o << "# Dual value set\n\n";
  o << "Ideal: " << (r["ideal"].is_string() ? r["ideal"].get<std::string>() : "custom")
    << "\n\n";
  o << "Gamma: " << ivecStr(r["gamma"]) << "\n\n";
  o << "Values: " << valueSetStr(r["values"]) << "\n\n";
  o << "Dual values: " << valueSetStr(r["dual_values"]) << "\n\n";
  o << "Checks passed (" << r["verify"].get<std::string>()
    << "): " << checksStr(r["checks"]) << "\n";
  return o.str();
}

std::string poincareMarkdown(const Json& r) {
  std::ostringstream o;
  o << "# Poincare polynomial\n\n";
  o << "Ideal: " << (r["ideal"].is_string() ? r["ideal"].get<std::string>() : "custom")
    << "\n\n";
  o << "P(t) = " << r["poly_string"].get<std::string>() << "\n\n";
  o << "P_dual(t) = " << r["dual_poly_string"].get<std::string>() << "\n\n";
  if (r["symmetric"].get<bool>()) {
    o << "Symmetry: verified\n";
  } else {
    o << "Symmetry: FAILED — " << r["diff"].get<std::string>() << "\n";
  }
  return o.str();
}

std::string strataMarkdown(const Json& r) {
  std::ostringstream o;
  o << "# Stratification scan\n\n";
  o << "| stratum | dim | negative values |\n| --- | --- | --- |\n";
  for (const Json& st : r["strata"]) {
    o << "| " << st["stratum"].get<std::string>() << " | ";
    if (st["dim"].is_null())
      o << "n/a";
    else
      o << st["dim"].get<int>();
    o << " | ";
    if (!st["parametrized"].get<bool>())
      o << "n/a";
    else
      o << rowsStr(st["negative_values"], true);
    o << " |\n";
  }
  o << "\n" << r["samples"].size() << " samples";
  const Json& flags = r["flags"];
  if (!flags.empty()) {
    o << "; flags:\n";
    for (const Json& f : flags) o << "- " << f.get<std::string>() << "\n";
  } else {
    o << ".\n";
  }
  return o.str();
}

std::string renderMarkdown(const Json& r) {
  const std::string kind = r.value("kind", "");
  if (kind == "analyze") return analyzeMarkdown(r);
  if (kind == "dual") return dualMarkdown(r);
  if (kind == "poincare") return poincareMarkdown(r);
  if (kind == "strata") return strataMarkdown(r);
  throw InputError("unknown report kind '" + kind + "'");
}

}  // namespace logres
