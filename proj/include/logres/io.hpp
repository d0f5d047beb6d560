#pragma once
// JSON input parsing, report assembly and markdown rendering shared by the
// command-line tool and the python bindings.  Parse errors are reported as
// InputError with a path-like context string (e.g. "branches[1].x").
#include <map>
#include <string>

#include "json.hpp"
#include "logres/curve.hpp"
#include "logres/ideal.hpp"
#include "logres/poincare.hpp"
#include "logres/residues.hpp"
#include "logres/strata.hpp"

namespace logres {

// insertion-ordered documents keep emitted reports stable and diffable
using Json = nlohmann::ordered_json;

enum class VerifyLevel { None, CrossCheck, Full };
// accepts "none", "cross-check", "full"
VerifyLevel parseVerifyLevel(const std::string& s);

// ---- scalars and containers ------------------------------------------------
// rationals travel as strings "p/q" (or "p"); integers are also accepted
Json emitRat(const Rat& r);
Rat parseRat(const Json& j, const std::string& ctx);
// field elements: a plain rational when the field is Q, otherwise an array of
// deg(K) rational coordinates in the power basis of the generator
Json emitFieldElem(const Field& K, const FieldElem& a);
FieldElem parseFieldElem(const Field& K, const Json& j, const std::string& ctx);
// {"min_poly": ["c0", ..., "1"]}; null or {} means the rationals
Json emitFieldSpec(const FieldSpec& s);
Field parseField(const Json& j);

// {"min_exp": k, "trunc": N | null, "coeffs": {"e": fieldelem, ...}};
// null/absent trunc means the series is exact; a bare rational is shorthand
// for an exact constant
Json emitSeries(const Field& K, const TruncatedSeries& s);
TruncatedSeries parseSeries(const Field& K, const Json& j, const std::string& ctx);
Json emitSeriesVector(const Field& K, const SeriesVector& v);
SeriesVector parseSeriesVector(const Field& K, const Json& j, const std::string& ctx);

// [{"coeff": fieldelem, "exps": [i, j, ...]}, ...]; nvars <= 0 infers the
// variable count from the exponent vectors
Json emitPolynomial(const Field& K, const Polynomial& f);
Polynomial parsePolynomial(const Field& K, const Json& j, int nvars,
                           const std::string& ctx);

// {"lambda": [...], "nu": [...], "box": [[...], ...]}
Json emitValueSet(const ValueSet& s);
ValueSet parseValueSet(const Json& j, const std::string& ctx);
// value tuples with infinite entries serialize infinity as null
Json emitMultiVal(const MultiVal& w);
// {"terms": [{"exps": [...], "coeff": n}, ...]} sorted lexicographically
Json emitLaurent(const LaurentPoly& P);
LaurentPoly parseLaurent(const Json& j, const std::string& ctx);

// ---- curve and ideal inputs ------------------------------------------------
// {"field": fieldspec?, "truncation": N?, "branches": [branch, ...],
//  "equations": [polynomial, ...]?, "plane_equation": polynomial?}
// branch: {"x": series, "y": series, ...} (coordinates x, y, z, w in order),
//         {"coords": [series, ...]}, or
//         {"seed": [{"e": fieldelem, ...} per coordinate],
//          "equation_index": i?, "lift_coord": l?}
// A document holding the curve under a "curve" key is unwrapped first.
// truncationOverride > 0 replaces the file's working precision.  When the
// computation needs more precision than requested, seed branches are relifted
// and exact branch data is reused at a higher order automatically.
Curve parseCurve(const Json& j, int truncationOverride = 0);

// a preset name ("O_D", "O_Dtilde", "jacobian", "kahler", "residues",
// "conductor"), or {"generators": [seriesvector, ...]}
FractionalIdeal parseIdeal(const Curve& C, const Json& j);

// ---- deformation plans -----------------------------------------------------
struct StrataPlan {
  Field K;
  DeformationFamily family;
  std::vector<std::vector<FieldElem>> points;
  std::map<int, BranchParam> seeds;  // per sample index, optional
  int truncation = 0;                // 0 = automatic
};
// {"family": {"field": fieldspec?, "base": polynomial, "monomials": [[i,j],...]},
//  "samples": [[fieldelem, ...], ...] | {"grid": [[fieldelem, ...], ...]},
//  "seeds": {"<sample index>": branch, ...}?, "truncation": N?}
// A grid lists candidate values per parameter; samples are their cartesian
// product in row-major order.
StrataPlan parsePlan(const Json& j, int truncationOverride = 0);

// ---- reports ---------------------------------------------------------------
// invariants, value sets of the Jacobian/Kaehler/residue modules, dimension
// data and the checks selected by the verification level
Json analyzeReport(const Curve& C, VerifyLevel lvl, int dmax = 128);
// value set of the ideal and of its dual (symmetry route); the direct dual
// algorithm cross-checks the result at levels above None
Json dualReport(const Curve& C, const Json& idealSpec, VerifyLevel lvl);
// Poincare polynomial of the ideal and its dual plus the symmetry verdict
Json poincareReport(const Curve& C, const Json& idealSpec);
// sample records, strata grouped by (tjurina, negative residue values), flags
Json strataReport(const StrataPlan& plan, const StrataReport& scan);

// ---- markdown rendering ----------------------------------------------------
std::string analyzeMarkdown(const Json& report);
std::string dualMarkdown(const Json& report);
std::string poincareMarkdown(const Json& report);
// header "| stratum | dim | negative values |" with one row per stratum
std::string strataMarkdown(const Json& report);
std::string renderMarkdown(const Json& report);  // dispatch on report["kind"]

}  // namespace logres
