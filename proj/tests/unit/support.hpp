#pragma once

#include "mfdr/io.hpp"
#include "mfdr/qseries.hpp"
#include "mfdr/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace mfdr {

inline void PrintTo(const QSeries& s, std::ostream* os)
{
    *os << "\n" << series_to_text(s);
}

} // namespace mfdr

namespace mfdr::test {

inline QSeries series(int start, std::initializer_list<const char*> coeffs, int trunc)
{
    std::vector<Rational> c;
    for (auto s : coeffs)
        c.push_back(parse_rational(s));
    return QSeries::from_coeffs(start, std::move(c), trunc);
}

inline Rational q(const char* s)
{
    return parse_rational(s);
}

} // namespace mfdr::test
