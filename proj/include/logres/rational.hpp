#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace logres {

using Rat = mpq_class;
using Int = mpz_class;

// parses "p", "-p", "p/q" (exact)
Rat ratFromString(const std::string& s);
std::string ratToString(const Rat& r);

// all positive divisors of |n| (n != 0); throws ComputationError if factoring stalls
std::vector<Int> divisorsOf(const Int& n);

// exact square root of a rational if it is a perfect square
std::optional<Rat> ratSqrt(const Rat& r);

}  // namespace logres
