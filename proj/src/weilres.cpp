#include "flagdescent/weilres.hpp"

#include <algorithm>
#include <set>

namespace fd {

int FiniteGroup::inv(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) == 0) return b;
    fail(Errc::invalid_params, "group element has no inverse");
}

void FiniteGroup::validate() const {
    int n = order();
    if (n == 0) fail(Errc::invalid_params, "empty group table");
    for (const auto& row : table)
        if (int(row.size()) != n) fail(Errc::invalid_params, "group table is not square");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) < 0 || mul(a, b) >= n) fail(Errc::invalid_params, "group table entry out of range");
    for (int a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) fail(Errc::invalid_params, "element 0 is not an identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail(Errc::invalid_params, "group table is not associative");
    for (int a = 0; a < n; ++a) inv(a);
}

MonomialAction ResSatake::twist(int sigma, const MonomialAction& act) const {
    return compose(compose(galois[size_t(sigma)], act), galois[size_t(sigma)].inverse());
}

void ResSatake::validate() const {
    gamma.validate();
    int n = gamma.order();
    if (int(galois.size()) != n || int(w.size()) != n)
        fail(Errc::invalid_params, "need one galois action and one w per group element");
    MonomialAction id = MonomialAction::identity(rank());
    if (!galois[0].same_action(id)) fail(Errc::cocycle_data_inconsistent, "galois_e must be the identity");
    if (!w[0].same_action(id)) fail(Errc::cocycle_data_inconsistent, "w_e must be the identity");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            MonomialAction lhs = compose(galois[size_t(s)], galois[size_t(t)]);
            if (!lhs.same_action(galois[size_t(gamma.mul(s, t))]))
                fail(Errc::cocycle_data_inconsistent, "galois data is not a homomorphism");
        }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            // w_{st} = sigma(w_t) w_s as actions on characters
            MonomialAction rhs = compose(twist(s, w[size_t(t)]), w[size_t(s)]);
            if (!rhs.same_action(w[size_t(gamma.mul(s, t))]))
                fail(Errc::cocycle_data_inconsistent, "w data violates w_{st} = s(w_t) w_s");
        }
    // each galois and w action must preserve the base root set, and
    // w_sigma must carry Pi onto the sigma-twist of Pi
    std::set<IntVec> roots;
    for (const Root& r : base.roots) roots.insert(r.root.c);
    for (int s = 0; s < n; ++s)
        for (const Root& r : base.roots) {
            if (!roots.count(galois[size_t(s)].apply_vec(r.root.c)))
                fail(Errc::cocycle_data_inconsistent, "galois action does not preserve the root set");
            if (!roots.count(w[size_t(s)].apply_vec(r.root.c)))
                fail(Errc::cocycle_data_inconsistent, "w action does not preserve the root set");
        }
    for (int s = 0; s < n; ++s) {
        std::set<IntVec> lhs, rhs;
        for (const Root& alpha : base_pi) {
            lhs.insert(w[size_t(s)].apply_vec(alpha.root.c));
            rhs.insert(galois[size_t(s)].apply_vec(alpha.root.c));
        }
        if (lhs != rhs)
            fail(Errc::cocycle_data_inconsistent, "w_sigma does not carry Pi onto its sigma-twist");
    }
}

namespace {

// generalized Satake action of sigma on the product simple system:
// alpha.tau -> (sigma(w_{sigma^{-1}} alpha)).(sigma tau)
std::pair<int, IntVec> satake_res(const ResSatake& rs, int sigma, int tau, const IntVec& alpha) {
    int sinv = rs.gamma.inv(sigma);
    IntVec moved = rs.galois[size_t(sigma)].apply_vec(rs.w[size_t(sinv)].apply_vec(alpha));
    return {rs.gamma.mul(sigma, tau), moved};
}

} // namespace

ResDynkin res_dynkin(const ResSatake& rs) {
    rs.validate();
    int n = rs.gamma.order();
    // index pi elements for orbit bookkeeping
    std::vector<IntVec> pi;
    for (const Root& r : rs.base_pi) pi.push_back(r.root.c);
    auto pi_index = [&](const IntVec& v) {
        for (size_t i = 0; i < pi.size(); ++i)
            if (pi[i] == v) return int(i);
        fail(Errc::satake_not_stable, "Satake action left the simple system");
    };
    std::set<std::pair<int, int>> seen;
    ResDynkin out;
    for (int tau = 0; tau < n; ++tau)
        for (size_t a = 0; a < pi.size(); ++a) {
            if (seen.count({tau, int(a)})) continue;
            std::vector<std::pair<int, int>> orbit;
            std::set<std::pair<int, int>> members;
            std::vector<std::pair<int, int>> frontier{{tau, int(a)}};
            members.insert(frontier[0]);
            while (!frontier.empty()) {
                auto [t, ai] = frontier.back();
                frontier.pop_back();
                orbit.push_back({t, ai});
                for (int s = 0; s < n; ++s) {
                    auto [nt, vec] = satake_res(rs, s, t, pi[size_t(ai)]);
                    std::pair<int, int> nxt{nt, pi_index(vec)};
                    if (members.insert(nxt).second) frontier.push_back(nxt);
                }
            }
            for (const auto& m : orbit) seen.insert(m);
            std::sort(orbit.begin(), orbit.end());
            out.orbits.push_back(std::move(orbit));
        }
    std::sort(out.orbits.begin(), out.orbits.end());
    return out;
}

long res_extension_pairing(const ResCharacter& lam, int alpha_idx, int sigma, const ResSatake& rs) {
    if (alpha_idx < 0 || alpha_idx >= int(rs.base_pi.size()))
        fail(Errc::invalid_params, "alpha index out of range");
    if (int(lam.components.size()) != rs.gamma.order())
        fail(Errc::rank_mismatch, "ResCharacter has wrong number of components");
    Cocharacter cv = rs.galois[size_t(sigma)].apply(rs.base_pi[size_t(alpha_idx)].coroot);
    Character moved = rs.w[size_t(sigma)].apply(lam.components[size_t(sigma)]);
    return pairing(cv, moved);
}

bool res_conjugation(const ResCharacter& lam, const ResSatake& rs) {
    if (int(lam.components.size()) != rs.gamma.order())
        fail(Errc::rank_mismatch, "ResCharacter has wrong number of components");
    for (int s = 0; s < rs.gamma.order(); ++s) {
        Character expect = rs.w[size_t(s)].inverse().apply(rs.galois[size_t(s)].apply(lam.components[0]));
        if (!(lam.components[size_t(s)] == expect)) return false;
    }
    return true;
}

ResCharacter make_conjugation_invariant(const Character& lambda_e, const ResSatake& rs) {
    ResCharacter out;
    for (int s = 0; s < rs.gamma.order(); ++s)
        out.components.push_back(rs.w[size_t(s)].inverse().apply(rs.galois[size_t(s)].apply(lambda_e)));
    return out;
}

bool res_beta_trivial(const ResCharacter& lam, const ResSatake& rs) {
    rs.validate(); // includes the telescoping identity via the cocycle condition
    if (!res_conjugation(lam, rs))
        fail(Errc::not_well_posed, "beta requires the conjugation condition");
    // the vector w-assignment telescopes: w_{ss'}^{-1} s(w_{s'}) w_s acts as
    // the identity on every component, so beta evaluates characters at e
    for (int s = 0; s < rs.gamma.order(); ++s)
        for (int t = 0; t < rs.gamma.order(); ++t) {
            MonomialAction prod = compose(rs.w[size_t(rs.gamma.mul(s, t))].inverse(),
                                          compose(rs.twist(s, rs.w[size_t(t)]), rs.w[size_t(s)]));
            if (!prod.same_action(MonomialAction::identity(rs.rank())))
                fail(Errc::cocycle_data_inconsistent, "telescoping identity failed");
        }
    return true;
}

RootDatum product_datum(const RootDatum& base, int gamma_order) {
    RootDatum out;
    out.target = base.target;
    out.rank = base.rank * gamma_order;
    for (int tau = 0; tau < gamma_order; ++tau)
        for (const Root& r : base.roots) {
            IntVec root(size_t(out.rank), 0), coroot(size_t(out.rank), 0);
            for (int i = 0; i < base.rank; ++i) {
                root[size_t(tau * base.rank + i)] = r.root.c[size_t(i)];
                coroot[size_t(tau * base.rank + i)] = r.coroot.c[size_t(i)];
            }
            out.roots.push_back(Root{Character{root}, Cocharacter{coroot}});
        }
    return out;
}

} // namespace fd
