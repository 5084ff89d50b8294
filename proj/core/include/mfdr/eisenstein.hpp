#pragma once

#include "mfdr/qseries.hpp"

namespace mfdr {

// B_k with B_2 = 1/6. k even and >= 2.
Rational bernoulli(int k);

Integer divisor_sigma(unsigned p, long m);

// G_k = -B_k/(2k) + sum sigma_{k-1}(m) q^m, or E_k = -(2k/B_k) G_k when normalized.
QSeries eisenstein(int k, int trunc, bool normalized);

enum class DeltaRoute { product, eisenstein };

// q prod (1-q^n)^24 or (E_4^3 - E_6^2)/1728.
QSeries delta_q(int trunc, DeltaRoute route = DeltaRoute::product);
// Both routes; InternalError if they differ.
QSeries delta_q_checked(int trunc);

// tau(m) from the product expansion.
Integer ramanujan_tau(long m);

} // namespace mfdr
