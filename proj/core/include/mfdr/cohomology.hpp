#pragma once

#include "mfdr/connection.hpp"
#include "mfdr/oxring.hpp"
#include "mfdr/qseries.hpp"

#include <optional>
#include <vector>

namespace mfdr {

struct Dimensions {
    int dim_mk;
    int ell;
    int dim_quotient;
};

// dims(2) = (0, 0, 1) by convention.
Dimensions dims(int k);

// The section with top coefficient f (weight -n) whose connection is supported on omega T^n.
AlgebraicSection phi(const OXElement& f);

// r(f) with nabla phi(f) = r(f) omega T^n. Weight n + 2.
OXElement tail(const OXElement& f);
// q-expansion of r(f); equals D^(n+1) f / n!
QSeries heads_and_tails_tail(const OXElement& f, int trunc);

struct TailReduction {
    OXElement tail;             // weight n + 2
    AlgebraicSection primitive; // e - nabla(primitive) = tail * omega T^n
};

// Removes every component except T^n from an omega-form by subtracting exact forms.
TailReduction reduce_to_tail(const AlgebraicSection& omega_form);

// M!_k / D^(k-1) M!_(2-k), stored through the representative with ord >= -ell.
struct CohClass {
    int weight = 0;
    int ell = 0;
    QSeries rep;
    std::optional<OXElement> alg_rep;
    // rep = f - D^(k-1) certificate
    OXElement certificate;

    // a_{-ell}, ..., a_{ell}
    std::vector<Rational> coords() const;
    bool same_class(const CohClass& o) const;
};

CohClass canonical_rep(const OXElement& f, int trunc);
// Certifies s with from_series first.
CohClass canonical_rep(const QSeries& s, int weight, int trunc);

// f_m = q^m + O(q^(ell+1)), m = -ell..ell
std::vector<CohClass> drbasis(int k, int trunc);

// T_p acting on weight-k forms: a_{pm} + p^(k-1) a_{m/p}.
QSeries hecke_series(const QSeries& s, int p, int weight);
CohClass hecke(int p, const CohClass& c, int trunc);

struct Decomposition {
    Rational eis;                  // multiple of the class of G_k
    std::vector<Rational> hol_cusp; // coefficients a_1..a_ell after removing the Eisenstein part
    std::vector<Rational> anti;     // a_{-ell}..a_{-1}
};

Decomposition decompose(const CohClass& c);
// Inverse of decompose, as coordinates a_{-ell}..a_{ell}.
std::vector<Rational> reassemble(int weight, const Decomposition& d);

bool is_prime(int p);

} // namespace mfdr
