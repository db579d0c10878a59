#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagdescent/matrix.hpp"
#include "flagdescent/symbolic.hpp"

namespace fd {

enum class Family {
    GL,          // GL_m over Z[1/2], compact-torus Cartan
    Upq,         // U(p,q), p >= q
    UStar,       // U*(2n)
    SOEvenOdd,   // SO(2p, 2q+1)
    Sp,          // Sp_n over Z[1/2]
    SpPQ,        // Sp(p,q)
    SOEvenEven,  // SO(2p, 2q)
    SOOddOdd,    // SO(2p+1, 2q+1)
    SOStar,      // SO*(2m)
    Gq,          // the rational form of SL_2 attached to diag(3, q), q = +-1
};

// A point of a form in its original coordinates.  Matrix-type forms hold one
// matrix; Weil-restriction-type forms hold the pair (a, b) standing for
// a (x) 1 + b (x) sqrt(-1), converted to split coordinates on demand.
struct GroupElement {
    ExactMatrix a;
    std::optional<ExactMatrix> b;

    bool is_res() const { return b.has_value(); }
    static GroupElement matrix(ExactMatrix m) { return {std::move(m), std::nullopt}; }
    static GroupElement res(ExactMatrix a, ExactMatrix b) { return {std::move(a), std::move(b)}; }

    // Components under k' (x) k' ~ k' x k': a + i b and a - i b.
    ExactMatrix comp1() const;
    ExactMatrix comp2() const;
    static GroupElement from_components(const ExactMatrix& g1, const ExactMatrix& g2, bool res);

    GroupElement mul(const GroupElement& o) const;
    GroupElement conj_coeffs() const; // the Galois twist in original coordinates
    bool operator==(const GroupElement& o) const;
};

class StandardForm {
public:
    StandardForm() = default; // parse() is the real entry point

    // Accepts "gl:5", "u:2,1", "u-star:4", "so:2,3", "sp:3", "sp-pq:1,1",
    // "so-star:6", "gq:+1".  Throws parse-error / unknown-family /
    // invalid-params.  SO forms with an odd first argument and an even second
    // one have no standard model here and are rejected.
    static StandardForm parse(const std::string& spec);

    Family family() const { return family_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return n_; }
    int rank() const { return rank_; }
    int ambient() const { return ambient_; }
    bool is_res_type() const { return res_; }
    SplitTarget target() const { return target_; }
    std::string name() const;

    // Defining equations of the form, at points with entries in Q(sqrt(-1)).
    // Integrality (entries in Z[1/2,sqrt(-1)], determinant a unit) is part of
    // the test except over the field base of gq.  Throws dimension-mismatch.
    bool membership(const GroupElement& g) const;

    ExactMatrix forward(const GroupElement& g) const;
    GroupElement backward(const ExactMatrix& m) const;
    // forward . conj_coeffs . backward: the Galois action transported to the
    // split side.
    ExactMatrix twisted_galois(const ExactMatrix& m) const;
    SymMatrix twisted_galois_sym(const SymMatrix& m) const;

    GroupElement identity_element() const;
    GroupElement w_matrix() const;

    // Ordered free basis of X_*(T (x) k') in the eps_i coordinates, the one
    // the lexicographic positive system is built from.
    std::vector<Cocharacter> ordered_basis() const;

    // H(k') parameterized by `rank` units, in original coordinates, and the
    // matching point of the diagonal split torus.
    GroupElement torus_point(const std::vector<GaussianRational>& units) const;
    ExactMatrix hs_point(const std::vector<GaussianRational>& units) const;

    // Reads e_i-coordinates off a diagonal split-side torus point; checks the
    // inverse-pair / fixed-entry shape.  Throws wbarw-not-in-torus.
    std::vector<GaussianRational> read_hs_coordinates(const ExactMatrix& m) const;

    // Characters of gq live in Z^2 modulo the span of (1,1); standard forms
    // have no relation.
    std::optional<IntVec> char_relation() const;

private:
    ExactMatrix conjugator() const;             // matrix-type split conjugator
    ExactMatrix res_component_partner(const ExactMatrix& g1) const;
    ExactMatrix pre_conjugator() const;         // applied after comp1 (SpPQ, SOStar)

    Family family_ = Family::GL;
    int p_ = 0, q_ = 0, n_ = 0;
    int rank_ = 0, ambient_ = 0;
    bool res_ = false;
    SplitTarget target_ = SplitTarget::GL;
};

} // namespace fd
