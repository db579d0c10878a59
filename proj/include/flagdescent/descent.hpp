#pragma once

#include <array>
#include <functional>

#include "flagdescent/satake.hpp"

namespace fd {

struct DescentVerdict {
    bool extends_to_parabolic = false;
    bool conjugation_ok = false;
    GaussianRational wbar_w_value;
    bool cocycle_trivial = false;
    bool admits_descent = false; // extends && conjugation && trivial
};

// <alpha^vee, lambda> = 0 for every alpha in Pi' (indices into sd.pi).
bool extends_to(const SatakeData& sd, const Character& lam, const std::vector<int>& pi_prime);

// conj(lambda) = w lambda, modulo the form's character relation when present.
bool conjugation_condition(const SatakeData& sd, const Character& lam);

// lambda(t) = prod t_i^{lambda_i} for a torus point given by its e_i
// coordinates; throws zero-entry.
GaussianRational eval_char(const Character& lam, const std::vector<GaussianRational>& torus_diag);

// Multiplicative 2-cocycle on Gamma = Z/2Z = {e, s}; index 0 = e, 1 = s.
struct Cocycle2 {
    std::array<std::array<GaussianRational, 2>, 2> values;
    const GaussianRational& at(int sigma, int tau) const { return values[size_t(sigma)][size_t(tau)]; }
    // sigma(beta(tau,rho)) * beta(sigma, tau rho) = beta(sigma tau, rho) * beta(sigma, tau)
    bool satisfies_identity() const;
};

// beta_lambda for the quadratic Galois group: identity slots are 1 and
// beta(s,s) = lambda(wbar w).  Requires the conjugation condition
// (not-well-posed otherwise) and wbar w in the torus (wbarw-not-in-torus).
Cocycle2 cocycle_beta(const SatakeData& sd, const Character& lam);

enum class QuadExtension { COverR, QiOverQ, Z12iOverZ12 };

// Is `value` of the form conj(c) * c for some nonzero c in the extension?
// For C/R and Z[1/2,i]/Z[1/2] the input must be +-1 and the answer is
// (value == 1); over Q(i)/Q the classical norm criterion decides: positive
// and even order at every prime p = 3 mod 4 (trial division, inputs capped).
bool is_trivial_quadratic(const GaussianRational& value, QuadExtension ext);

QuadExtension extension_for(const StandardForm& form);

DescentVerdict check_descent(const SatakeData& sd, const Character& lam, const std::vector<int>& pi_prime);

struct LineBundleClassification {
    std::vector<IntVec> lattice_basis;       // lambdas passing extension + conjugation
    std::optional<IntVec> parity_constraint; // mod-2 functional from lambda(wbar w) = 1
    std::function<bool(const Character&)> contains;
};

// Admissible characters for a Satake-stable Pi'; throws pi-prime-not-stable.
LineBundleClassification classify_line_bundles(const SatakeData& sd, const std::vector<int>& pi_prime);

// Both Z[1/2] and the fields R, Q are PIDs, so H^1 vanishes and descent data
// are unique up to isomorphism whenever they exist.
std::string descent_data_count(const std::string& base_tag);

enum class IrrClass { Irr1, Irr0, IrrMinus1 };
const char* irr_class_name(IrrClass c);

// Partition of irreducible representations by lowest weight; lambda must be
// antidominant (<alpha^vee, lambda> <= 0 on Pi).
IrrClass irr_partition(const SatakeData& sd, const Character& lam);

} // namespace fd
