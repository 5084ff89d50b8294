#pragma once

#include "mfdr/oxring.hpp"

namespace mfdr {

// Element of O(Z) = Q[ubar, vbar]/(ubar^3 - 27 vbar^2 - 1) in grade [m] of Z/12.
// The residue is kept in the basis ubar^a vbar^b with b <= 1.
class ZElement {
public:
    ZElement() = default;
    // Reduces modulo (Delta - 1). Every monomial must have weight = grade mod 12.
    static ZElement make(UVPolynomial residue, int grade);

    const UVPolynomial& residue() const { return residue_; }
    int grade() const { return grade_; }
    bool is_zero() const { return residue_.is_zero(); }

    bool operator==(const ZElement& o) const { return grade_ == o.grade_ && residue_ == o.residue_; }
    bool operator!=(const ZElement& o) const { return !(*this == o); }

private:
    UVPolynomial residue_;
    int grade_ = 0;
};

ZElement restrict_to_Z(const OXElement& e);
// The unique weight-m preimage; GradingError unless m is even and m = grade mod 12.
OXElement lift_from_Z(const ZElement& z, int weight);

} // namespace mfdr
