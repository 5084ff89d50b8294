#include "mfdr/zmodel.hpp"

#include "mfdr/errors.hpp"

#include <algorithm>
#include <string>

namespace mfdr {

namespace {

int mod12(int m)
{
    return ((m % 12) + 12) % 12;
}

} // namespace

ZElement ZElement::make(UVPolynomial residue, int grade)
{
    ZElement z;
    z.grade_ = mod12(grade);
    if (z.grade_ % 2 != 0)
        return z;
    for (const auto& [k, c] : residue.terms())
        if (mod12(4 * k.first + 6 * k.second) != z.grade_)
            throw GradingError("monomial u^" + std::to_string(k.first) + " v^" + std::to_string(k.second)
                               + " does not lie in grade " + std::to_string(z.grade_));
    z.residue_ = residue.reduce_delta_one();
    return z;
}

ZElement restrict_to_Z(const OXElement& e)
{
    return ZElement::make(e.numerator(), e.weight());
}

OXElement lift_from_Z(const ZElement& z, int weight)
{
    if (weight % 2 != 0)
        throw GradingError("lift_from_Z: odd weight " + std::to_string(weight));
    if (mod12(weight) != z.grade())
        throw GradingError("lift_from_Z: weight " + std::to_string(weight) + " is not in grade "
                           + std::to_string(z.grade()));
    if (z.is_zero())
        return OXElement::zero(weight);
    // u^a v^b of weight w lifts to u^a v^b Delta^((weight - w)/12)
    int c = 0;
    for (const auto& [k, coef] : z.residue().terms()) {
        int w = 4 * k.first + 6 * k.second;
        c = std::max(c, (w - weight) / 12);
    }
    UVPolynomial num;
    UVPolynomial delta = UVPolynomial::delta();
    for (const auto& [k, coef] : z.residue().terms()) {
        int w = 4 * k.first + 6 * k.second;
        int s = (weight - w) / 12 + c;
        num += UVPolynomial::monomial(k.first, k.second, coef) * delta.pow(static_cast<unsigned>(s));
    }
    return OXElement::make(std::move(num), c, weight);
}

} // namespace mfdr
