#include "flagdescent/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace fd {

using nlohmann::json;

namespace {

json rat_pair(const Rational& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        fail(Errc::unsupported_value, "scalar too large for a JSON report");
    return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

Rational rat_from(const json& j) {
    if (!j.is_array() || j.size() != 2) fail(Errc::parse_error, "rational must be [num,den]");
    auto piece = [](const json& v) -> Integer {
        if (v.is_number_integer()) return Integer(v.get<long>());
        if (v.is_string()) return Integer(v.get<std::string>());
        fail(Errc::parse_error, "rational component must be an integer");
    };
    Integer num = piece(j[0]), den = piece(j[1]);
    if (den == 0) fail(Errc::parse_error, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

json scalar_json(const GaussianRational& z) {
    return json{{"re", rat_pair(z.re())}, {"im", rat_pair(z.im())}};
}

GaussianRational scalar_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::parse_error, "scalar must be an object");
    return GaussianRational(rat_from(j.at("re")), rat_from(j.at("im")));
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json intvec_json(const IntVec& v) { return json(v); }

json roots_json(const std::vector<Root>& roots) {
    json out = json::array();
    for (const Root& r : roots) out.push_back(json{{"root", r.root.c}, {"coroot", r.coroot.c}});
    return out;
}

json scalars_json(const std::vector<GaussianRational>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(scalar_json(z));
    return out;
}

// admissible lambdas with max-norm <= bound, capped so listings stay small
json example_lambdas(const LineBundleClassification& cls, int rank, int bound) {
    json out = json::array();
    if (bound < 0) return out;
    double count = 1;
    for (int i = 0; i < rank; ++i) count *= 2 * bound + 1;
    if (count > 250000) return out;
    IntVec lam(size_t(rank), -bound);
    while (true) {
        if (cls.contains(Character{lam})) out.push_back(lam);
        int i = 0;
        while (i < rank && lam[size_t(i)] == bound) lam[size_t(i++)] = -bound;
        if (i == rank) break;
        ++lam[size_t(i)];
        if (rank == 0) break;
    }
    if (rank == 0 && cls.contains(Character{IntVec{}})) out.push_back(IntVec{});
    return out;
}

json type_json(const SatakeData& sd, const std::vector<int>& pi_prime, int max_coord) {
    LineBundleClassification cls = classify_line_bundles(sd, pi_prime);
    json jt;
    jt["indices"] = pi_prime;
    json roots = json::array();
    for (int i : pi_prime) roots.push_back(sd.pi[size_t(i)].root.c);
    jt["roots"] = roots;
    json basis = json::array();
    for (const IntVec& b : cls.lattice_basis) basis.push_back(b);
    jt["lattice_basis"] = basis;
    jt["parity_constraint"] = cls.parity_constraint ? json(*cls.parity_constraint) : json(nullptr);
    jt["examples"] = example_lambdas(cls, sd.form.rank(), max_coord);
    return jt;
}

} // namespace

json classify_report(const StandardForm& form, const std::vector<int>* pi_prime, int max_coord) {
    SatakeData sd = build_satake(form);
    DynkinScheme dyn = dynkin_scheme(sd);
    json out;
    out["command"] = "classify";
    out["form"] = form.name();
    out["rank"] = form.rank();
    out["split_target"] = split_target_name(form.target());
    json pi = json::array();
    for (const Root& r : sd.pi) pi.push_back(r.root.c);
    out["pi"] = pi;
    out["dynkin"] = json{{"orbits", dyn.orbits},
                         {"z12_components", dyn.components_over_base()},
                         {"z12i_components", dyn.components_over_extension()}};
    json types = json::array();
    if (pi_prime) {
        types.push_back(type_json(sd, *pi_prime, max_coord));
    } else {
        for (const auto& subset : parabolic_types_over_base(sd))
            types.push_back(type_json(sd, subset, max_coord));
    }
    out["types"] = types;
    return out;
}

json check_report(const StandardForm& form, const IntVec& lambda, const std::vector<int>& pi_prime) {
    SatakeData sd = build_satake(form);
    if (!is_satake_stable(sd, pi_prime))
        fail(Errc::pi_not_stable, "Pi' is not stable under the generalized Satake involution");
    Character lam{lambda};
    DescentVerdict v = check_descent(sd, lam, pi_prime);
    json out;
    out["command"] = "check";
    out["form"] = form.name();
    out["lambda"] = lambda;
    out["pi_prime"] = pi_prime;
    out["verdict"] = json{{"extends_to_parabolic", v.extends_to_parabolic},
                          {"conjugation_ok", v.conjugation_ok},
                          {"wbar_w_value", scalar_json(v.wbar_w_value)},
                          {"cocycle_trivial", v.cocycle_trivial},
                          {"admits_descent", v.admits_descent}};
    out["wbar_w_diag"] = scalars_json(wbar_w_coordinates(form));
    return out;
}

json verify_w_report(const StandardForm& form) {
    WReport rep = verify_w(form);
    json out;
    out["command"] = "verify-w";
    out["form"] = form.name();
    json checks = json::array();
    for (const WCheck& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["checks"] = checks;
    out["all_pass"] = rep.all_pass();
    out["w_split"] = matrix_json(form.forward(form.w_matrix()));
    out["w_bar_w"] = rep.wbar_w_diag.empty() ? json(nullptr) : json(scalars_json(rep.wbar_w_diag));
    return out;
}

json cocycle_report(const StandardForm& form, const IntVec& lambda) {
    SatakeData sd = build_satake(form);
    Character lam{lambda};
    json out;
    out["command"] = "cocycle";
    out["form"] = form.name();
    out["lambda"] = lambda;
    Cocycle2 beta = cocycle_beta(sd, lam); // throws not-well-posed if conjugation fails
    out["values"] = json{{"e,e", scalar_json(beta.at(0, 0))},
                         {"e,s", scalar_json(beta.at(0, 1))},
                         {"s,e", scalar_json(beta.at(1, 0))},
                         {"s,s", scalar_json(beta.at(1, 1))}};
    out["identity_verified"] = beta.satisfies_identity();
    QuadExtension ext = extension_for(form);
    out["extension"] = ext == QuadExtension::QiOverQ ? "Q(i)/Q" : "Z[1/2,i]/Z[1/2]";
    out["trivial"] = is_trivial_quadratic(beta.at(1, 1), ext);
    return out;
}

json irr_report(const StandardForm& form, const IntVec& lambda) {
    SatakeData sd = build_satake(form);
    IrrClass c = irr_partition(sd, Character{lambda});
    json out;
    out["command"] = "irr";
    out["form"] = form.name();
    out["lambda"] = lambda;
    out["class"] = irr_class_name(c);
    return out;
}

namespace {

MonomialAction monomial_from_json(const json& j, int rank) {
    if (!j.is_object()) fail(Errc::parse_error, "monomial action must be an object");
    MonomialAction act;
    act.target = j.at("target").get<std::vector<int>>();
    act.sign = j.at("sign").get<std::vector<int>>();
    if (int(act.target.size()) != rank || int(act.sign.size()) != rank)
        fail(Errc::parse_error, "monomial action has wrong rank");
    std::vector<bool> seen(size_t(rank), false);
    for (int i = 0; i < rank; ++i) {
        int t = act.target[size_t(i)];
        if (t < 0 || t >= rank || seen[size_t(t)]) fail(Errc::parse_error, "monomial target is not a permutation");
        seen[size_t(t)] = true;
        if (act.sign[size_t(i)] != 1 && act.sign[size_t(i)] != -1)
            fail(Errc::parse_error, "monomial signs must be +-1");
    }
    return act;
}

SplitTarget target_from_string(const std::string& s) {
    if (s == "gl") return SplitTarget::GL;
    if (s == "so-odd") return SplitTarget::SO_odd;
    if (s == "sp") return SplitTarget::Sp;
    if (s == "so-even") return SplitTarget::SO_even;
    if (s == "so-prime") return SplitTarget::SOprime_even;
    fail(Errc::parse_error, "unknown split target '" + s + "'");
}

} // namespace

json res_classify_report(const json& request) {
    if (!request.is_object()) fail(Errc::parse_error, "request must be a JSON object");
    ResSatake rs;
    rs.gamma.table = request.at("gamma_table").get<std::vector<std::vector<int>>>();
    const json& base = request.at("base");
    SplitTarget target = target_from_string(base.at("target").get<std::string>());
    int rank = base.at("rank").get<int>();
    rs.base = build_root_datum(target, rank);

    // default simple system: lexicographic for the standard basis
    std::vector<Cocharacter> basis;
    for (int i = 0; i < rank; ++i) {
        IntVec v(size_t(rank), 0);
        v[size_t(i)] = 1;
        basis.push_back(Cocharacter{v});
    }
    rs.base_pi = simple_system(lex_positive_system(rs.base, basis));

    int order = rs.gamma.order();
    const json& gal = request.at("galois");
    const json& ws = request.at("w");
    if (int(gal.size()) != order || int(ws.size()) != order)
        fail(Errc::parse_error, "need one galois action and one w per group element");
    for (int s = 0; s < order; ++s) {
        rs.galois.push_back(monomial_from_json(gal[size_t(s)], rank));
        rs.w.push_back(monomial_from_json(ws[size_t(s)], rank));
    }

    ResDynkin dyn = res_dynkin(rs);
    json out;
    out["command"] = "res-classify";
    out["gamma_order"] = order;
    out["base_rank"] = rank;
    json pi = json::array();
    for (const Root& r : rs.base_pi) pi.push_back(r.root.c);
    out["pi"] = pi;
    json orbits = json::array();
    for (const auto& orbit : dyn.orbits) {
        json o = json::array();
        for (auto [tau, idx] : orbit) o.push_back(json::array({tau, idx}));
        orbits.push_back(std::move(o));
    }
    out["dynkin"] = json{{"components", dyn.component_count()},
                         {"orbit_size", order},
                         {"component_base", "k'"},
                         {"orbits", orbits}};
    out["type_count"] = double(1ull << dyn.orbits.size());
    out["telescoping_ok"] = true; // res_dynkin validated the cocycle data

    if (request.contains("lambda")) {
        auto comps = request.at("lambda").get<std::vector<IntVec>>();
        if (int(comps.size()) != order) fail(Errc::parse_error, "lambda needs one component per group element");
        ResCharacter lam;
        for (auto& c : comps) {
            if (int(c.size()) != rank) fail(Errc::parse_error, "lambda component has wrong rank");
            lam.components.push_back(Character{c});
        }
        json lj;
        bool conj = res_conjugation(lam, rs);
        lj["conjugation_ok"] = conj;
        lj["beta_trivial"] = conj ? json(res_beta_trivial(lam, rs)) : json(nullptr);
        json pairings = json::array();
        for (int s = 0; s < order; ++s) {
            json row = json::array();
            for (int a = 0; a < int(rs.base_pi.size()); ++a)
                row.push_back(res_extension_pairing(lam, a, s, rs));
            pairings.push_back(std::move(row));
        }
        lj["extension_pairings"] = pairings;
        out["lambda"] = lj;
    }
    return out;
}

namespace {

std::string scalar_text(const json& s) { return scalar_from_json(s).str(); }

std::string vec_text(const json& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<long>();
    os << ")";
    return os.str();
}

void render_classify(const json& r, std::ostream& os) {
    os << "form " << r["form"].get<std::string>() << "  (split target " << r["split_target"].get<std::string>()
       << ", rank " << r["rank"].get<int>() << ")\n";
    os << "Pi:";
    for (const auto& root : r["pi"]) os << " " << vec_text(root);
    os << "\n";
    const auto& dyn = r["dynkin"];
    os << "Dynkin scheme: Spec Z[1/2]^" << dyn["z12_components"].get<int>() << " u Spec Z[1/2,i]^"
       << dyn["z12i_components"].get<int>() << "\n";
    os << "parabolic types over Z[1/2]: " << r["types"].size() << "\n";
    for (const auto& t : r["types"]) {
        os << "  Pi' = {";
        bool first = true;
        for (const auto& root : t["roots"]) {
            os << (first ? "" : ", ") << vec_text(root);
            first = false;
        }
        os << "}\n    lattice basis:";
        if (t["lattice_basis"].empty()) os << " (only lambda = 0)";
        for (const auto& b : t["lattice_basis"]) os << " " << vec_text(b);
        os << "\n";
        if (!t["parity_constraint"].is_null())
            os << "    parity: sum of lambda_i over " << vec_text(t["parity_constraint"]) << " must be even\n";
        if (!t["examples"].empty()) {
            os << "    examples:";
            for (const auto& e : t["examples"]) os << " " << vec_text(e);
            os << "\n";
        }
    }
}

void render_check(const json& r, std::ostream& os) {
    os << "form " << r["form"].get<std::string>() << ", lambda " << vec_text(r["lambda"]) << "\n";
    const auto& v = r["verdict"];
    os << "  extends to parabolic: " << (v["extends_to_parabolic"].get<bool>() ? "yes" : "no") << "\n";
    os << "  conjugation condition: " << (v["conjugation_ok"].get<bool>() ? "yes" : "no") << "\n";
    os << "  lambda(wbar w) = " << scalar_text(v["wbar_w_value"]) << "\n";
    os << "  cocycle trivial: " << (v["cocycle_trivial"].get<bool>() ? "yes" : "no") << "\n";
    os << "  admits descent datum: " << (v["admits_descent"].get<bool>() ? "yes" : "no") << "\n";
}

void render_verify(const json& r, std::ostream& os) {
    os << "form " << r["form"].get<std::string>() << "\n";
    for (const auto& c : r["checks"]) {
        os << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
        std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) os << "  (" << detail << ")";
        os << "\n";
    }
    if (!r["w_bar_w"].is_null()) {
        os << "  wbar w =";
        for (const auto& s : r["w_bar_w"]) os << " " << scalar_text(s);
        os << "\n";
    }
}

void render_cocycle(const json& r, std::ostream& os) {
    os << "form " << r["form"].get<std::string>() << ", lambda " << vec_text(r["lambda"]) << "\n";
    os << "  beta(s,s) = " << scalar_text(r["values"]["s,s"]) << "\n";
    os << "  trivial over " << r["extension"].get<std::string>() << ": "
       << (r["trivial"].get<bool>() ? "yes" : "no") << "\n";
}

void render_irr(const json& r, std::ostream& os) {
    os << "form " << r["form"].get<std::string>() << ", lambda " << vec_text(r["lambda"]) << ": "
       << r["class"].get<std::string>() << "\n";
}

void render_res(const json& r, std::ostream& os) {
    os << "Res case: |Gamma| = " << r["gamma_order"].get<int>() << ", base rank " << r["base_rank"].get<int>()
       << "\n";
    const auto& dyn = r["dynkin"];
    os << "Dynkin scheme: " << dyn["components"].get<int>() << " component(s) over k', orbit size "
       << dyn["orbit_size"].get<int>() << "\n";
    os << "parabolic types over k: " << r["type_count"].get<double>() << "\n";
    if (r.contains("lambda")) {
        const auto& l = r["lambda"];
        os << "lambda: conjugation " << (l["conjugation_ok"].get<bool>() ? "yes" : "no");
        if (!l["beta_trivial"].is_null())
            os << ", beta trivial: " << (l["beta_trivial"].get<bool>() ? "yes" : "no");
        os << "\n";
    }
}

} // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    std::string cmd = report.value("command", "");
    if (cmd == "classify")
        render_classify(report, os);
    else if (cmd == "check")
        render_check(report, os);
    else if (cmd == "verify-w")
        render_verify(report, os);
    else if (cmd == "cocycle")
        render_cocycle(report, os);
    else if (cmd == "irr")
        render_irr(report, os);
    else if (cmd == "res-classify")
        render_res(report, os);
    else
        os << report.dump(2) << "\n";
    return os.str();
}

} // namespace fd
