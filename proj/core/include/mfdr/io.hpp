#pragma once

#include "mfdr/cohomology.hpp"
#include "mfdr/connection.hpp"
#include "mfdr/oxring.hpp"
#include "mfdr/pairing.hpp"
#include "mfdr/periods.hpp"
#include "mfdr/qseries.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace mfdr {

using Json = nlohmann::ordered_json;

// Text format:
//   valuation=<v> trunc=<N>
//   <m>: <p/q>
// one line per exponent in [valuation, trunc).
std::string series_to_text(const QSeries& s);
QSeries series_from_text(std::string_view text);
Json series_to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

// weight=<m> denom_pow=<c>; <coeff>*u^<a>*v^<b> + ...
std::string ox_to_text(const OXElement& e);
OXElement ox_from_text(std::string_view text);
Json ox_to_json(const OXElement& e);
OXElement ox_from_json(const Json& j);

Json section_to_json(const AlgebraicSection& s);
Json section_to_json(const SeriesSection& s);
AlgebraicSection algebraic_section_from_json(const Json& j);

Json class_to_json(const CohClass& c);
std::string class_to_text(const CohClass& c);

Json pairing_to_json(const PairingValue& p);
std::string pairing_to_text(const PairingValue& p);

// decimal strings with `digits` significant digits
Json poly_to_json(const ComplexPoly& p, int digits);
std::string poly_to_text(const ComplexPoly& p, int digits);
std::string complex_to_string(const BigComplex& z, int digits);
BigComplex parse_complex(std::string_view text, long bits);

} // namespace mfdr
