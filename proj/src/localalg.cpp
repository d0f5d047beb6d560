#include "logres/localalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "logres/errors.hpp"
#include "logres/linalg.hpp"

namespace logres {

namespace {

int totalDeg(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// all exponent vectors in m variables with total degree < D, ordered by
// (total degree, lex): low-order monomials get the leading columns so the
// elimination behaves like a local standard basis computation
std::vector<std::vector<int>> monomialsBelow(int m, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m - 1) {
      cur[pos] = left;  // spend the rest here so the total degree is exact
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  for (int d = 0; d < D; ++d) rec(0, d);
  return out;
}

}  // namespace

int localQuotientDim(const Field& K, const std::vector<Polynomial>& gens, int dmax) {
  std::vector<const Polynomial*> gs;
  int m = -1;
  for (auto& g : gens) {
    if (g.isZero()) continue;
    if (m < 0) m = g.nvars;
    if (g.nvars != m) throw InputError("generators with mixed arities");
    if (g.minTotalDegree() == 0) return 0;  // a unit: the quotient collapses
    gs.push_back(&g);
  }
  if (gs.empty())
    throw ComputationError("the ideal is zero: the local quotient is infinite dimensional");

  int prev = -1;
  for (int D = 1; D <= dmax; ++D) {
    auto mons = monomialsBelow(m, D);
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = (int)i;

    SparseEchelon ech(K);
    std::vector<int> shift(m, 0);
    for (const Polynomial* g : gs) {
      int d0 = g->minTotalDegree();
      // multiply by every monomial that keeps some term below degree D
      for (auto& alpha : monomialsBelow(m, std::max(D - d0, 0))) {
        SparseEchelon::Row row;
        for (auto& [e, c] : g->terms) {
          std::vector<int> beta = e;
          for (int i = 0; i < m; ++i) beta[i] += alpha[i];
          if (totalDeg(beta) < D) row.emplace_back(idx.at(beta), c);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        ech.insert(std::move(row));
      }
    }
    int codim = (int)mons.size() - ech.rank();
    if (codim == prev) return codim;  // maximal-ideal power absorbed: final
    prev = codim;
  }
  throw ComputationError(
      "local quotient did not stabilize: the dimension is infinite or exceeds the "
      "degree cap");
}

int tjurinaDirect(const Field& K, const Polynomial& f, int dmax) {
  std::vector<Polynomial> gens{f};
  for (int i = 0; i < f.nvars; ++i) gens.push_back(f.diff(K, i));
  return localQuotientDim(K, gens, dmax);
}

int milnorDirect(const Field& K, const Polynomial& f, int dmax) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < f.nvars; ++i) gens.push_back(f.diff(K, i));
  return localQuotientDim(K, gens, dmax);
}

}  // namespace logres
