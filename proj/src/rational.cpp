#include "logres/rational.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

Rat ratFromString(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (char c : s)
    if (!(isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
      throw InputError("bad rational literal: " + s);
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: " + s);
  }
}

std::string ratToString(const Rat& r) { return r.get_str(); }

std::vector<Int> divisorsOf(const Int& n) {
  Int m = abs(n);
  if (m == 0) throw InputError("divisorsOf(0)");
  std::vector<std::pair<Int, int>> fact;
  Int d = 2;
  long steps = 0;
  while (m > 1) {
    if (++steps > 2'000'000)
      throw ComputationError("integer too hard to factor while checking irreducibility");
    if (d * d > m) {
      fact.push_back({m, 1});
      break;
    }
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      fact.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  std::vector<Int> divs{1};
  for (auto& [p, e] : fact) {
    size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<Rat> ratSqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int num = r.get_num(), den = r.get_den();
  Int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace logres
