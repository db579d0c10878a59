#pragma once

#include "flagdescent/monomial.hpp"

namespace fd {

// Finite group by multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::vector<std::vector<int>> table;

    int order() const { return int(table.size()); }
    int mul(int a, int b) const { return table[size_t(a)][size_t(b)]; }
    int inv(int a) const;
    // identity/associativity/inverse checks; throws invalid-params
    void validate() const;
};

// Character of the restriction torus: one base character per Galois element,
// indexed compatibly with the FiniteGroup.
struct ResCharacter {
    std::vector<Character> components;
};

// Satake-side data for Res_{k'/k} G': the base root datum with its simple
// system, the Galois action on base characters per sigma, and a Weyl
// representative action w_sigma per sigma satisfying w_{st} = s(w_t) w_s.
struct ResSatake {
    FiniteGroup gamma;
    RootDatum base;
    std::vector<Root> base_pi;
    std::vector<MonomialAction> galois; // sigma -> action of {}^sigma on X^*
    std::vector<MonomialAction> w;      // sigma -> action of w_sigma on X^*

    int rank() const { return base.rank; }
    // twisted action: sigma(w_tau) = galois_sigma . w_tau . galois_sigma^{-1}
    MonomialAction twist(int sigma, const MonomialAction& act) const;
    // galois must be a homomorphism with galois_e = id, w_e = id, and the
    // cocycle condition must hold; throws cocycle-data-inconsistent
    void validate() const;
};

struct ResDynkin {
    // orbit members as (tau, pi index); every orbit has size |Gamma| and the
    // component field is the quadratic extension k'
    std::vector<std::vector<std::pair<int, int>>> orbits;
    int component_count() const { return int(orbits.size()); }
};

// Orbits of the generalized Satake action on the simple system of the
// product datum: |Pi| components, each over k'.
ResDynkin res_dynkin(const ResSatake& rs);

// <sigma(alpha^vee), w_sigma lambda_sigma> computed in the base datum.
long res_extension_pairing(const ResCharacter& lam, int alpha_idx, int sigma, const ResSatake& rs);

// lambda_sigma = w_sigma^{-1} . sigma(lambda_e) for every sigma.
bool res_conjugation(const ResCharacter& lam, const ResSatake& rs);

// Constructs the component tuple that res_conjugation accepts.
ResCharacter make_conjugation_invariant(const Character& lambda_e, const ResSatake& rs);

// Always true once the telescoping identity of the vector w-assignment is
// verified; throws cocycle-data-inconsistent when the supplied data violate
// w_{st} = s(w_t) w_s, and not-well-posed when conjugation fails.
bool res_beta_trivial(const ResCharacter& lam, const ResSatake& rs);

// The product root datum of |Gamma| copies of the base, with roots supported
// in single components (materialized for brute-force tests).
RootDatum product_datum(const RootDatum& base, int gamma_order);

} // namespace fd
