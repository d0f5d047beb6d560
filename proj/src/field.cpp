#include "logres/field.hpp"

#include <sstream>

#include "logres/errors.hpp"

namespace logres {

namespace {

using QPoly = std::vector<Rat>;  // low -> high, trailing zeros trimmed, empty = 0

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int qdeg(const QPoly& p) { return (int)p.size() - 1; }  // -1 for zero

// rem := rem mod den, returns quotient (den nonzero)
QPoly qdivmod(QPoly& rem, const QPoly& den) {
  QPoly quo;
  qtrim(rem);
  if (qdeg(rem) >= qdeg(den)) quo.assign(qdeg(rem) - qdeg(den) + 1, Rat(0));
  while (qdeg(rem) >= qdeg(den)) {
    int k = qdeg(rem) - qdeg(den);
    Rat c = rem.back() / den.back();
    quo[k] = c;
    for (int i = 0; i <= qdeg(den); ++i) rem[i + k] -= c * den[i];
    qtrim(rem);
  }
  return quo;
}

// all rational roots of a polynomial with rational coefficients (deg >= 1)
std::vector<Rat> rationalRoots(const QPoly& polyIn) {
  QPoly poly = polyIn;
  qtrim(poly);
  if (qdeg(poly) < 1) return {};
  // scale to integer coefficients
  Int den = 1;
  for (auto& c : poly) den = lcm(den, c.get_den());
  std::vector<Int> ip;
  for (auto& c : poly) {
    Rat s = c * den;
    ip.push_back(s.get_num());
  }
  std::vector<Rat> roots;
  // strip zero roots
  size_t shift = 0;
  while (shift < ip.size() && ip[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Rat(0));
    ip.erase(ip.begin(), ip.begin() + shift);
  }
  if (ip.size() < 2) return roots;
  auto evalAt = [&](const Rat& x) {
    Rat acc(0);
    for (int i = (int)ip.size() - 1; i >= 0; --i) acc = acc * x + Rat(ip[i]);
    return acc;
  };
  for (const Int& p : divisorsOf(ip.front()))
    for (const Int& q : divisorsOf(ip.back()))
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        cand.canonicalize();
        if (evalAt(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

}  // namespace

bool isIrreducibleOverQ(const std::vector<Rat>& poly) {
  int d = (int)poly.size() - 1;
  if (d < 1) return false;
  if (poly.back() != 1) throw InputError("minimal polynomial must be monic");
  if (d == 1) return true;
  if (d > 4) throw InputError("extension degree > 4 not supported");
  if (!rationalRoots(poly).empty()) return false;
  if (d <= 3) return true;
  // quartic: also rule out a factorization into two rational quadratics.
  // depress z = y - b3/4, then z^4+b3 z^3+b2 z^2+b1 z+b0 = y^4 + P y^2 + Q y + R;
  // a splitting (y^2+ay+b)(y^2-ay+c) exists over Q iff the resolvent
  // u^3 + 2P u^2 + (P^2-4R) u - Q^2 has a rational root u = a^2 that is a
  // square (u = 0 needs Q = 0 and P^2-4R a square).
  const Rat &b0 = poly[0], &b1 = poly[1], &b2 = poly[2], &b3 = poly[3];
  Rat P = b2 - 3 * b3 * b3 / 8;
  Rat Q = b1 - b2 * b3 / 2 + b3 * b3 * b3 / 8;
  Rat R = b0 - b1 * b3 / 4 + b2 * b3 * b3 / 16 - 3 * b3 * b3 * b3 * b3 / 256;
  QPoly resolvent{-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
  for (const Rat& u : rationalRoots(resolvent)) {
    if (u == 0) {
      if (Q == 0 && ratSqrt(P * P - 4 * R)) return false;
    } else if (u > 0 && ratSqrt(u)) {
      return false;
    }
  }
  return true;
}

void Field::validateSpec() const {
  if (spec_.minPoly.size() < 2) throw InputError("minimal polynomial needs degree >= 1");
  if (spec_.minPoly.back() != 1) throw InputError("minimal polynomial must be monic");
  if (!isIrreducibleOverQ(spec_.minPoly))
    throw InputError("minimal polynomial is reducible over Q");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  validateSpec();
  d_ = spec_.degree();
  // z^k mod m for k = d .. 2d-2
  if (d_ >= 2) {
    std::vector<Rat> cur(d_, Rat(0));  // z^d reduced
    for (int i = 0; i < d_; ++i) cur[i] = -spec_.minPoly[i];
    zpow_.push_back(cur);
    for (int k = d_ + 1; k <= 2 * d_ - 2; ++k) {
      std::vector<Rat> nxt(d_, Rat(0));
      for (int i = 0; i < d_ - 1; ++i) nxt[i + 1] = cur[i];
      Rat top = cur[d_ - 1];
      if (top != 0)
        for (int i = 0; i < d_; ++i) nxt[i] += top * zpow_[0][i];
      cur = nxt;
      zpow_.push_back(cur);
    }
  }
}

FieldElem Field::one() const {
  FieldElem e(d_, Rat(0));
  e[0] = 1;
  return e;
}

FieldElem Field::fromRat(const Rat& r) const {
  FieldElem e(d_, Rat(0));
  e[0] = r;
  return e;
}

FieldElem Field::gen() const {
  if (d_ == 1) return fromRat(-spec_.minPoly[0]);
  FieldElem e(d_, Rat(0));
  e[1] = 1;
  return e;
}

bool Field::isZero(const FieldElem& a) const {
  for (auto& c : a)
    if (c != 0) return false;
  return true;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r(a);
  for (int i = 0; i < d_; ++i) r[i] += b[i];
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r(a);
  for (int i = 0; i < d_; ++i) r[i] -= b[i];
  return r;
}

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem r(a);
  for (auto& c : r) c = -c;
  return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  if (d_ == 1) return {a[0] * b[0]};
  std::vector<Rat> conv(2 * d_ - 1, Rat(0));
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  FieldElem r(conv.begin(), conv.begin() + d_);
  for (int k = d_; k <= 2 * d_ - 2; ++k)
    if (conv[k] != 0)
      for (int i = 0; i < d_; ++i) r[i] += conv[k] * zpow_[k - d_][i];
  return r;
}

FieldElem Field::mulRat(const FieldElem& a, const Rat& c) const {
  FieldElem r(a);
  for (auto& x : r) x *= c;
  return r;
}

void Field::addMulInPlace(FieldElem& acc, const FieldElem& a, const FieldElem& b) const {
  if (d_ == 1) {
    acc[0] += a[0] * b[0];
    return;
  }
  FieldElem prod = mul(a, b);
  for (int i = 0; i < d_; ++i) acc[i] += prod[i];
}

FieldElem Field::inv(const FieldElem& a) const {
  if (isZero(a)) throw InputError("division by zero in coefficient field");
  if (d_ == 1) return {Rat(1) / a[0]};
  // extended Euclid on (m, a) tracking only the Bezout coefficient of a
  QPoly r0(spec_.minPoly), r1(a), t0, t1{Rat(1)};
  qtrim(r0);
  qtrim(r1);
  while (qdeg(r1) > 0) {
    QPoly rem = r0;
    QPoly q = qdivmod(rem, r1);
    // t2 = t0 - q * t1
    QPoly t2 = t0;
    t2.resize(std::max(t2.size(), q.size() + t1.size()), Rat(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
    qtrim(t2);
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  if (r1.empty()) throw InvariantViolation("gcd(a, m) nonconstant for irreducible m");
  Rat c = r1[0];
  FieldElem res(d_, Rat(0));
  for (size_t i = 0; i < t1.size() && i < (size_t)d_; ++i) res[i] = t1[i] / c;
  return res;
}

std::string Field::str(const FieldElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    Rat c = a[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && i > 0) {
      os << "-";
      c = abs(c);
    }
    if (i == 0)
      os << c.get_str();
    else {
      if (c != 1) os << c.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace logres
