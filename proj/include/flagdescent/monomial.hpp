#pragma once

#include <vector>

#include "flagdescent/rootdata.hpp"

namespace fd {

// Signed permutation of the character lattice: e_i -> sign[i] * e_{target[i]}.
// The optional `conj` flag records that the transformation was accompanied by
// a field conjugation; it does not affect the integer action.
struct MonomialAction {
    std::vector<int> target;
    std::vector<int> sign;
    bool conj = false;

    int rank() const { return int(target.size()); }
    static MonomialAction identity(int rank);

    IntVec apply_vec(const IntVec& v) const;
    Character apply(const Character& lam) const { return Character{apply_vec(lam.c)}; }
    // Signed permutations are orthogonal for the canonical pairing, so the
    // same data acts on cocharacters.
    Cocharacter apply(const Cocharacter& mu) const { return Cocharacter{apply_vec(mu.c)}; }

    MonomialAction inverse() const;
    bool is_involution() const;
    bool same_action(const MonomialAction& o) const { return target == o.target && sign == o.sign; }
    bool operator==(const MonomialAction& o) const {
        return target == o.target && sign == o.sign && conj == o.conj;
    }

    // Integer matrix M with (M lambda) = apply_vec(lambda).
    std::vector<IntVec> matrix() const;
};

// compose(a, b): first b, then a.
MonomialAction compose(const MonomialAction& a, const MonomialAction& b);

} // namespace fd
