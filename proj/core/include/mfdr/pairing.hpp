#pragma once

#include "mfdr/cohomology.hpp"
#include "mfdr/qseries.hpp"

#include <string_view>
#include <vector>

namespace mfdr {

// {f, g} = sum_{m != 0} a_m(f) b_{-m}(g) / m^(k-1), exponent taken from the first argument.
inline constexpr std::string_view kPairingConvention = "first-arg-exponent";

struct PairingValue {
    Rational value;
    std::string_view convention = kPairingConvention;
};

// Strict mode rejects a first argument with a_0 != 0.
PairingValue bracket(const QSeries& f, const QSeries& g, int weight, bool strict = true);
// c1 must be cuspidal.
PairingValue pair_classes(const CohClass& c1, const CohClass& c2);

struct GramMatrix {
    int weight = 0;
    std::vector<int> rows; // m for f_m, m != 0
    std::vector<int> cols; // m for f_m
    std::vector<std::vector<Rational>> entries;
};

GramMatrix gram_matrix(int weight);

} // namespace mfdr
