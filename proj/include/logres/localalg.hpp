#pragma once
#include "logres/poly.hpp"

namespace logres {

// dimension over K of K[[x_1..x_m]] / (gens), the local quotient at the
// origin. Works degree by degree and stops once the codimension stabilizes
// (then the maximal ideal power is inside the ideal and the count is final).
// Throws ComputationError when the quotient is still growing at degree dmax.
int localQuotientDim(const Field& K, const std::vector<Polynomial>& gens, int dmax = 128);

// dim K[[x]]/(f, all partials of f)
int tjurinaDirect(const Field& K, const Polynomial& f, int dmax = 128);
// dim K[[x]]/(all partials of f)
int milnorDirect(const Field& K, const Polynomial& f, int dmax = 128);

}  // namespace logres
