#include "flagdescent/satake.hpp"

#include <algorithm>
#include <sstream>

namespace fd {

MonomialAction action_on_characters(const StandardForm& form, const GroupElement& g) {
    ExactMatrix w = form.forward(g);
    SymMatrix t = sym_torus_point(form.target(), form.rank());
    SymMatrix conj = SymMatrix::from_const(w.inverse(), form.rank()) * t *
                     SymMatrix::from_const(w, form.rank());
    return read_torus_action(conj, form.target(), form.rank());
}

MonomialAction galois_on_characters(const StandardForm& form) {
    SymMatrix t = sym_torus_point(form.target(), form.rank());
    MonomialAction act = read_torus_action(form.twisted_galois_sym(t), form.target(), form.rank());
    act.conj = true;
    return act;
}

SatakeData build_satake(const StandardForm& form) {
    SatakeData sd{form, build_root_datum(form.target(), form.rank()), {}, {}, {}, {}, {}};
    sd.positive = lex_positive_system(sd.datum, form.ordered_basis());
    sd.pi = simple_system(sd.positive);
    sd.w_chars = action_on_characters(form, form.w_matrix());
    sd.galois_chars = galois_on_characters(form);

    // satake(alpha) = conj(w alpha); it must permute Pi
    sd.satake_involution.resize(sd.pi.size());
    for (size_t i = 0; i < sd.pi.size(); ++i) {
        Character image = sd.galois_chars.apply(sd.w_chars.apply(sd.pi[i].root));
        int found = -1;
        for (size_t j = 0; j < sd.pi.size(); ++j)
            if (sd.pi[j].root == image) {
                found = int(j);
                break;
            }
        if (found < 0)
            fail(Errc::satake_not_stable, "the generalized Satake action does not permute Pi");
        sd.satake_involution[i] = found;
    }
    for (size_t i = 0; i < sd.pi.size(); ++i)
        if (sd.satake_involution[size_t(sd.satake_involution[i])] != int(i))
            fail(Errc::satake_not_stable, "the generalized Satake action is not an involution on Pi");
    return sd;
}

int DynkinScheme::components_over_base() const {
    int k = 0;
    for (const auto& o : orbits) k += o.size() == 1;
    return k;
}

int DynkinScheme::components_over_extension() const {
    int k = 0;
    for (const auto& o : orbits) k += o.size() == 2;
    return k;
}

DynkinScheme dynkin_scheme(const SatakeData& sd) {
    DynkinScheme out;
    std::vector<bool> seen(sd.pi.size(), false);
    for (size_t i = 0; i < sd.pi.size(); ++i) {
        if (seen[i]) continue;
        int j = sd.satake_involution[i];
        seen[i] = true;
        if (j == int(i)) {
            out.orbits.push_back({int(i)});
        } else {
            seen[size_t(j)] = true;
            out.orbits.push_back({int(i), j});
        }
    }
    return out;
}

std::vector<std::vector<int>> parabolic_types_over_base(const SatakeData& sd) {
    DynkinScheme dyn = dynkin_scheme(sd);
    size_t k = dyn.orbits.size();
    std::vector<std::vector<int>> out;
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<int> subset;
        for (size_t b = 0; b < k; ++b)
            if (mask & (size_t(1) << b))
                subset.insert(subset.end(), dyn.orbits[b].begin(), dyn.orbits[b].end());
        std::sort(subset.begin(), subset.end());
        out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_satake_stable(const SatakeData& sd, const std::vector<int>& pi_prime) {
    std::vector<bool> in(sd.pi.size(), false);
    for (int i : pi_prime) {
        if (i < 0 || i >= int(sd.pi.size())) fail(Errc::invalid_params, "Pi' index out of range");
        in[size_t(i)] = true;
    }
    for (int i : pi_prime)
        if (!in[size_t(sd.satake_involution[size_t(i)])]) return false;
    return true;
}

GroupElement wbar_w(const StandardForm& form) {
    GroupElement w = form.w_matrix();
    return w.conj_coeffs().mul(w);
}

std::vector<GaussianRational> wbar_w_coordinates(const StandardForm& form) {
    return form.read_hs_coordinates(form.forward(wbar_w(form)));
}

bool WReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

WReport verify_w(const StandardForm& form) {
    WReport report;
    GroupElement w = form.w_matrix();

    WCheck membership{"membership", false, ""};
    try {
        membership.pass = form.membership(w);
        if (!membership.pass) membership.detail = "w fails the defining equations";
    } catch (const Error& e) {
        membership.detail = e.what();
    }
    report.checks.push_back(membership);

    WCheck normalizer{"normalizer", false, ""};
    MonomialAction w_act;
    bool have_act = false;
    try {
        w_act = action_on_characters(form, w);
        normalizer.pass = true;
        have_act = true;
    } catch (const Error& e) {
        normalizer.detail = e.what();
    }
    report.checks.push_back(normalizer);

    WCheck moves_pi{"w_pi_equals_conj_pi", false, ""};
    if (!have_act) {
        moves_pi.detail = "skipped: w does not normalize the torus";
    } else {
        RootDatum datum = build_root_datum(form.target(), form.rank());
        std::vector<Root> pi = simple_system(lex_positive_system(datum, form.ordered_basis()));
        MonomialAction galois = galois_on_characters(form);
        std::vector<IntVec> lhs, rhs;
        for (const Root& alpha : pi) {
            lhs.push_back(w_act.apply(alpha.root).c);
            rhs.push_back(galois.apply(alpha.root).c);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        moves_pi.pass = lhs == rhs;
        if (!moves_pi.pass) moves_pi.detail = "w(Pi) and conj(Pi) differ as sets";
    }
    report.checks.push_back(moves_pi);

    GroupElement ww = wbar_w(form);
    WCheck square{"wbarw_squared_is_identity", false, ""};
    GroupElement sq = ww.mul(ww);
    GroupElement id = form.identity_element();
    square.pass = sq == id;
    if (!square.pass) square.detail = "(wbar w)^2 is not the identity";
    report.checks.push_back(square);

    WCheck torus{"wbarw_in_torus", false, ""};
    try {
        report.wbar_w_diag = form.read_hs_coordinates(form.forward(ww));
        torus.pass = true;
    } catch (const Error& e) {
        torus.detail = e.what();
    }
    report.checks.push_back(torus);

    return report;
}

} // namespace fd
