#pragma once

#include "flagdescent/forms.hpp"

namespace fd {

// Everything needed to run the quadratic descent program for one form: the
// simple system from the lexicographic positive system, the Galois and
// w-actions on the character lattice, and the induced involution of Pi.
struct SatakeData {
    StandardForm form;
    RootDatum datum;
    std::vector<Root> positive;
    std::vector<Root> pi;               // canonical order; Pi' indices refer to this
    MonomialAction galois_chars;        // lambda -> conj(lambda)
    MonomialAction w_chars;             // lambda -> w lambda
    std::vector<int> satake_involution; // index permutation of pi
};

// Induced signed permutation of X^*(H_s) from conjugation by forward(g);
// throws not-in-normalizer when g does not normalize the torus.
MonomialAction action_on_characters(const StandardForm& form, const GroupElement& g);

// The twisted Galois action on X^*(H_s), computed by transporting the
// entrywise conjugation through the split isomorphism on a generic torus
// point.
MonomialAction galois_on_characters(const StandardForm& form);

SatakeData build_satake(const StandardForm& form);

struct DynkinScheme {
    std::vector<std::vector<int>> orbits; // indices into pi, each of size 1 or 2
    int components_over_base() const;     // Spec Z[1/2] factors
    int components_over_extension() const; // Spec Z[1/2,sqrt(-1)] factors
};

DynkinScheme dynkin_scheme(const SatakeData& sd);

// All Satake-stable subsets of Pi (unions of involution orbits), each as a
// sorted index list; 2^(orbit count) of them.
std::vector<std::vector<int>> parabolic_types_over_base(const SatakeData& sd);

bool is_satake_stable(const SatakeData& sd, const std::vector<int>& pi_prime);

struct WCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct WReport {
    std::vector<WCheck> checks;
    std::vector<GaussianRational> wbar_w_diag; // e_i coordinates, when in the torus
    bool all_pass() const;
};

// membership, normalizer, wPi = conj(Pi), (wbar w)^2 = e, wbar w in the torus
WReport verify_w(const StandardForm& form);

// wbar * w in original coordinates.
GroupElement wbar_w(const StandardForm& form);

// e_i coordinates of forward(wbar w); throws wbarw-not-in-torus.
std::vector<GaussianRational> wbar_w_coordinates(const StandardForm& form);

} // namespace fd
