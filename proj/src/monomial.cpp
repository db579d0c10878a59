#include "flagdescent/monomial.hpp"

namespace fd {

MonomialAction MonomialAction::identity(int rank) {
    MonomialAction a;
    a.target.resize(size_t(rank));
    a.sign.assign(size_t(rank), 1);
    for (int i = 0; i < rank; ++i) a.target[size_t(i)] = i;
    return a;
}

IntVec MonomialAction::apply_vec(const IntVec& v) const {
    if (v.size() != target.size()) fail(Errc::rank_mismatch, "monomial action rank mismatch");
    IntVec out(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) out[size_t(target[i])] += sign[i] * v[i];
    return out;
}

MonomialAction MonomialAction::inverse() const {
    MonomialAction inv;
    inv.target.resize(target.size());
    inv.sign.resize(sign.size());
    inv.conj = conj;
    for (size_t i = 0; i < target.size(); ++i) {
        inv.target[size_t(target[i])] = int(i);
        inv.sign[size_t(target[i])] = sign[i];
    }
    return inv;
}

bool MonomialAction::is_involution() const {
    return compose(*this, *this).same_action(identity(rank()));
}

std::vector<IntVec> MonomialAction::matrix() const {
    std::vector<IntVec> m(target.size(), IntVec(target.size(), 0));
    for (size_t i = 0; i < target.size(); ++i) m[size_t(target[i])][i] = sign[i];
    return m;
}

MonomialAction compose(const MonomialAction& a, const MonomialAction& b) {
    if (a.rank() != b.rank()) fail(Errc::rank_mismatch, "composing actions of different rank");
    MonomialAction out;
    out.target.resize(a.target.size());
    out.sign.resize(a.sign.size());
    out.conj = a.conj != b.conj;
    for (size_t i = 0; i < a.target.size(); ++i) {
        out.target[i] = a.target[size_t(b.target[i])];
        out.sign[i] = b.sign[i] * a.sign[size_t(b.target[i])];
    }
    return out;
}

} // namespace fd
