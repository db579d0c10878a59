#include "flagdescent/forms.hpp"

#include <sstream>

namespace fd {

namespace {

const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf(Rational(1, 2));
// 1/(2i) = -i/2
const GaussianRational kInvTwoI = GaussianRational(Rational(0), Rational(-1, 2));

ExactMatrix so2_block(const GaussianRational& u) {
    GaussianRational a = (u + u.inverse()) * kHalf;
    GaussianRational b = (u - u.inverse()) * kInvTwoI;
    ExactMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = -b;
    m.at(1, 1) = a;
    return m;
}

// g_2^{-1} diag(u,v) g_2; maps forward (conjugation by g_2) onto diag(u,v)
ExactMatrix gl_pair_block(const GaussianRational& u, const GaussianRational& v) {
    GaussianRational a = (u + v) * kHalf;
    GaussianRational b = (u - v) * kInvTwoI;
    ExactMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = -b;
    m.at(1, 1) = a;
    return m;
}

ExactMatrix so11_block(const GaussianRational& t) {
    GaussianRational c = (t + t.inverse()) * kHalf;
    GaussianRational s = (t - t.inverse()) * kHalf;
    ExactMatrix m(2, 2);
    m.at(0, 0) = c;
    m.at(0, 1) = s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    return m;
}

} // namespace

ExactMatrix GroupElement::comp1() const {
    if (!b) return a;
    return a + b->scaled(kI);
}

ExactMatrix GroupElement::comp2() const {
    if (!b) return a;
    return a - b->scaled(kI);
}

GroupElement GroupElement::from_components(const ExactMatrix& g1, const ExactMatrix& g2, bool res) {
    if (!res) return matrix(g1);
    ExactMatrix a = (g1 + g2).scaled(kHalf);
    ExactMatrix b = (g1 - g2).scaled(kInvTwoI);
    return GroupElement::res(std::move(a), std::move(b));
}

GroupElement GroupElement::mul(const GroupElement& o) const {
    if (!is_res() && !o.is_res()) return matrix(a * o.a);
    return from_components(comp1() * o.comp1(), comp2() * o.comp2(), true);
}

GroupElement GroupElement::conj_coeffs() const {
    GroupElement out;
    out.a = a.conj();
    if (b) out.b = b->conj();
    return out;
}

bool GroupElement::operator==(const GroupElement& o) const {
    return comp1() == o.comp1() && comp2() == o.comp2();
}

namespace {

std::vector<long> parse_params(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) fail(Errc::parse_error, "empty parameter in form spec");
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(cur, &used);
        } catch (const std::exception&) {
            fail(Errc::parse_error, "bad integer '" + cur + "' in form spec");
        }
        if (used != cur.size()) fail(Errc::parse_error, "bad integer '" + cur + "' in form spec");
        out.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c == '+' && cur.empty())
            ; // tolerate a leading plus, as in "gq:+1"
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

} // namespace

StandardForm StandardForm::parse(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos || colon + 1 >= spec.size())
        fail(Errc::parse_error, "form spec must look like 'family:params', got '" + spec + "'");
    std::string fam = spec.substr(0, colon);
    std::vector<long> ps = parse_params(spec.substr(colon + 1));

    StandardForm f;
    auto need = [&](size_t k) {
        if (ps.size() != k)
            fail(Errc::parse_error, "family '" + fam + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (fam == "gl") {
        need(1);
        if (ps[0] < 1) fail(Errc::invalid_params, "gl:m needs m >= 1");
        f.family_ = Family::GL;
        f.n_ = int(ps[0]) / 2;
        f.ambient_ = f.rank_ = int(ps[0]);
        f.target_ = SplitTarget::GL;
    } else if (fam == "u") {
        need(2);
        if (ps[0] < 0 || ps[1] < 0 || ps[0] + ps[1] < 1) fail(Errc::invalid_params, "u:p,q needs p+q >= 1");
        if (ps[0] < ps[1])
            fail(Errc::invalid_params, "u:p,q is modeled only for p >= q; swap the arguments");
        f.family_ = Family::Upq;
        f.p_ = int(ps[0]);
        f.q_ = int(ps[1]);
        f.n_ = f.p_ + f.q_;
        f.ambient_ = f.rank_ = f.n_;
        f.target_ = SplitTarget::GL;
        f.res_ = true;
    } else if (fam == "u-star") {
        need(1);
        if (ps[0] < 2 || ps[0] % 2 != 0) fail(Errc::invalid_params, "u-star:m needs even m >= 2");
        f.family_ = Family::UStar;
        f.n_ = int(ps[0]) / 2;
        f.ambient_ = f.rank_ = 2 * f.n_;
        f.target_ = SplitTarget::GL;
        f.res_ = true;
    } else if (fam == "so") {
        need(2);
        long P = ps[0], Q = ps[1];
        if (P < 0 || Q < 0 || P + Q < 1) fail(Errc::invalid_params, "so:P,Q needs P+Q >= 1");
        if (P % 2 == 1 && Q % 2 == 0)
            fail(Errc::invalid_params,
                 "so:P,Q with odd P and even Q has no standard model here; swap the arguments");
        if (P % 2 == 0 && Q % 2 == 0) {
            f.family_ = Family::SOEvenEven;
            f.p_ = int(P / 2);
            f.q_ = int(Q / 2);
            f.n_ = f.p_ + f.q_;
            f.rank_ = f.n_;
            f.ambient_ = 2 * f.n_;
            f.target_ = SplitTarget::SO_even;
        } else if (P % 2 == 0) {
            f.family_ = Family::SOEvenOdd;
            f.p_ = int(P / 2);
            f.q_ = int((Q - 1) / 2);
            f.n_ = f.p_ + f.q_;
            f.rank_ = f.n_;
            f.ambient_ = 2 * f.n_ + 1;
            f.target_ = SplitTarget::SO_odd;
        } else {
            f.family_ = Family::SOOddOdd;
            f.p_ = int((P - 1) / 2);
            f.q_ = int((Q - 1) / 2);
            f.n_ = f.p_ + f.q_;
            f.rank_ = f.n_ + 1;
            f.ambient_ = 2 * f.n_ + 2;
            f.target_ = SplitTarget::SO_even;
        }
    } else if (fam == "sp") {
        need(1);
        if (ps[0] < 1) fail(Errc::invalid_params, "sp:n needs n >= 1");
        f.family_ = Family::Sp;
        f.n_ = int(ps[0]);
        f.rank_ = f.n_;
        f.ambient_ = 2 * f.n_;
        f.target_ = SplitTarget::Sp;
    } else if (fam == "sp-pq") {
        need(2);
        if (ps[0] < 0 || ps[1] < 0 || ps[0] + ps[1] < 1) fail(Errc::invalid_params, "sp-pq:p,q needs p+q >= 1");
        f.family_ = Family::SpPQ;
        f.p_ = int(ps[0]);
        f.q_ = int(ps[1]);
        f.n_ = f.p_ + f.q_;
        f.rank_ = f.n_;
        f.ambient_ = 2 * f.n_;
        f.target_ = SplitTarget::Sp;
        f.res_ = true;
    } else if (fam == "so-star") {
        need(1);
        if (ps[0] < 2 || ps[0] % 2 != 0) fail(Errc::invalid_params, "so-star:m needs even m >= 2");
        f.family_ = Family::SOStar;
        f.ambient_ = int(ps[0]);
        f.rank_ = f.ambient_ / 2;
        f.n_ = f.rank_; // rank of the compact torus
        f.target_ = SplitTarget::SOprime_even;
        f.res_ = true;
    } else if (fam == "gq") {
        need(1);
        if (ps[0] != 1 && ps[0] != -1) fail(Errc::invalid_params, "gq:q needs q in {+1,-1}");
        f.family_ = Family::Gq;
        f.q_ = int(ps[0]);
        f.ambient_ = 2;
        f.rank_ = 2;
        f.n_ = 1;
        f.target_ = SplitTarget::GL;
        f.res_ = true;
    } else {
        fail(Errc::unknown_family, "unknown family '" + fam + "'");
    }
    return f;
}

std::string StandardForm::name() const {
    std::ostringstream os;
    switch (family_) {
        case Family::GL: os << "gl:" << ambient_; break;
        case Family::Upq: os << "u:" << p_ << "," << q_; break;
        case Family::UStar: os << "u-star:" << 2 * n_; break;
        case Family::SOEvenOdd: os << "so:" << 2 * p_ << "," << 2 * q_ + 1; break;
        case Family::Sp: os << "sp:" << n_; break;
        case Family::SpPQ: os << "sp-pq:" << p_ << "," << q_; break;
        case Family::SOEvenEven: os << "so:" << 2 * p_ << "," << 2 * q_; break;
        case Family::SOOddOdd: os << "so:" << 2 * p_ + 1 << "," << 2 * q_ + 1; break;
        case Family::SOStar: os << "so-star:" << ambient_; break;
        case Family::Gq: os << "gq:" << (q_ > 0 ? "+1" : "-1"); break;
    }
    return os.str();
}

ExactMatrix StandardForm::conjugator() const {
    switch (family_) {
        case Family::GL: return mat_g(ambient_);
        case Family::SOEvenOdd: return mat_gpq(2 * p_, 2 * q_ + 1);
        case Family::SOEvenEven: return mat_gpq(2 * p_, 2 * q_);
        case Family::SOOddOdd: return mat_gpq(2 * p_ + 1, 2 * q_ + 1);
        case Family::Sp: return mat_gprime(ambient_);
        default: fail(Errc::invalid_params, "no conjugator for restriction-type form");
    }
}

ExactMatrix StandardForm::pre_conjugator() const {
    switch (family_) {
        case Family::SpPQ: return mat_Ipq(n_ + p_, q_);
        case Family::SOStar: return mat_gprime(ambient_);
        default: return ExactMatrix::identity(ambient_);
    }
}

// The second component of a point of the form, as a function of the first:
// the defining equations tie them together.
ExactMatrix StandardForm::res_component_partner(const ExactMatrix& g1) const {
    switch (family_) {
        case Family::Upq: {
            ExactMatrix ipq = mat_Ipq(p_, q_);
            return ipq * g1.transpose().inverse() * ipq;
        }
        case Family::UStar:
        case Family::SOStar: {
            ExactMatrix j = mat_J(ambient_ / 2);
            return (-j) * g1 * j;
        }
        case Family::SpPQ: {
            ExactMatrix ip = mat_Ipqpq(p_, q_);
            return ip * g1.transpose().inverse() * ip;
        }
        case Family::Gq: {
            ExactMatrix iq = ExactMatrix::diag({GaussianRational(3), GaussianRational(q_)});
            return iq.inverse() * g1.transpose().inverse() * iq;
        }
        default: fail(Errc::invalid_params, "matrix-type form has no component partner");
    }
}

bool StandardForm::membership(const GroupElement& g) const {
    if (g.a.rows() != ambient_ || g.a.cols() != ambient_)
        fail(Errc::dimension_mismatch, "element size does not match the form's ambient size");
    if (g.is_res() && !res_) fail(Errc::dimension_mismatch, "restriction-type element passed to a matrix form");
    if (g.is_res() && (g.b->rows() != ambient_ || g.b->cols() != ambient_))
        fail(Errc::dimension_mismatch, "element size does not match the form's ambient size");

    bool integral = family_ == Family::Gq ||
                    (g.a.entries_dyadic() && (!g.is_res() || g.b->entries_dyadic()));
    if (!integral) return false;

    switch (family_) {
        case Family::GL:
            return is_dyadic_gaussian_unit(g.a.det());
        case Family::Sp: {
            ExactMatrix j = mat_J(n_);
            return g.a.transpose() * j * g.a == j;
        }
        case Family::SOEvenOdd:
        case Family::SOEvenEven:
        case Family::SOOddOdd: {
            ExactMatrix ipq = family_ == Family::SOEvenOdd ? mat_Ipq(2 * p_, 2 * q_ + 1)
                              : family_ == Family::SOEvenEven
                                  ? mat_Ipq(2 * p_, 2 * q_)
                                  : mat_Ipq(2 * p_ + 1, 2 * q_ + 1);
            return g.a.det().is_one() && g.a.transpose() * ipq * g.a == ipq;
        }
        case Family::Upq: {
            ExactMatrix g1 = g.comp1(), g2 = g.comp2();
            ExactMatrix ipq = mat_Ipq(p_, q_);
            return g2.transpose() * ipq * g1 == ipq;
        }
        case Family::UStar: {
            ExactMatrix g1 = g.comp1(), g2 = g.comp2();
            ExactMatrix j = mat_J(n_);
            return g2 * j == j * g1 && is_dyadic_gaussian_unit(g1.det());
        }
        case Family::SpPQ: {
            ExactMatrix g1 = g.comp1(), g2 = g.comp2();
            ExactMatrix j = mat_J(n_);
            ExactMatrix ip = mat_Ipqpq(p_, q_);
            return g2 * j == j * g1 && g1.det().is_one() && g2.transpose() * ip * g1 == ip;
        }
        case Family::SOStar: {
            ExactMatrix g1 = g.comp1(), g2 = g.comp2();
            ExactMatrix j = mat_J(ambient_ / 2);
            return g2 * j == j * g1 && g1.det().is_one() &&
                   g1.transpose() * g1 == ExactMatrix::identity(ambient_);
        }
        case Family::Gq: {
            ExactMatrix g1 = g.comp1(), g2 = g.comp2();
            ExactMatrix iq = ExactMatrix::diag({GaussianRational(3), GaussianRational(q_)});
            return g1.det().is_one() && g2.det().is_one() && g2.transpose() * iq * g1 == iq;
        }
    }
    return false;
}

ExactMatrix StandardForm::forward(const GroupElement& g) const {
    if (g.a.rows() != ambient_) fail(Errc::dimension_mismatch, "forward: wrong element size");
    if (!res_) {
        ExactMatrix c = conjugator();
        return c * g.a * c.inverse();
    }
    ExactMatrix p = pre_conjugator();
    if (family_ == Family::Upq || family_ == Family::UStar || family_ == Family::Gq) return g.comp1();
    return p * g.comp1() * p.inverse();
}

GroupElement StandardForm::backward(const ExactMatrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_)
        fail(Errc::dimension_mismatch, "backward: wrong matrix size");
    if (!res_) {
        ExactMatrix c = conjugator();
        return GroupElement::matrix(c.inverse() * m * c);
    }
    ExactMatrix p = pre_conjugator();
    ExactMatrix g1 = (family_ == Family::Upq || family_ == Family::UStar || family_ == Family::Gq)
                         ? m
                         : p.inverse() * m * p;
    ExactMatrix g2 = res_component_partner(g1);
    return GroupElement::from_components(g1, g2, true);
}

ExactMatrix StandardForm::twisted_galois(const ExactMatrix& m) const {
    return forward(backward(m).conj_coeffs());
}

SymMatrix StandardForm::twisted_galois_sym(const SymMatrix& m) const {
    int nv = m.nvars();
    auto cst = [&](const ExactMatrix& x) { return SymMatrix::from_const(x, nv); };
    if (!res_) {
        ExactMatrix c = conjugator();
        ExactMatrix u = c * c.conj().inverse();
        return cst(u) * m.conj_coeffs() * cst(u.inverse());
    }
    ExactMatrix p = pre_conjugator();
    bool plain = family_ == Family::Upq || family_ == Family::UStar || family_ == Family::Gq;
    SymMatrix x = plain ? m : cst(p.inverse()) * m * cst(p);
    SymMatrix y = x.conj_coeffs();
    SymMatrix z;
    switch (family_) {
        case Family::Upq: {
            ExactMatrix ipq = mat_Ipq(p_, q_);
            z = cst(ipq) * y.transpose().inverse_monomial() * cst(ipq);
            break;
        }
        case Family::UStar:
        case Family::SOStar: {
            ExactMatrix j = mat_J(ambient_ / 2);
            z = cst(-j) * y * cst(j);
            break;
        }
        case Family::SpPQ: {
            ExactMatrix ip = mat_Ipqpq(p_, q_);
            z = cst(ip) * y.transpose().inverse_monomial() * cst(ip);
            break;
        }
        case Family::Gq: {
            ExactMatrix iq = ExactMatrix::diag({GaussianRational(3), GaussianRational(q_)});
            z = cst(iq.inverse()) * y.transpose().inverse_monomial() * cst(iq);
            break;
        }
        default: fail(Errc::invalid_params, "unexpected family");
    }
    return plain ? z : cst(p) * z * cst(p.inverse());
}

GroupElement StandardForm::identity_element() const {
    if (!res_) return GroupElement::matrix(ExactMatrix::identity(ambient_));
    return GroupElement::res(ExactMatrix::identity(ambient_), ExactMatrix(ambient_, ambient_));
}

GroupElement StandardForm::w_matrix() const {
    switch (family_) {
        case Family::GL:
            return GroupElement::matrix(mat_S(ambient_));
        case Family::Upq: {
            ExactMatrix w(n_, n_);
            // antidiagonal: sqrt(-1) K_q corners, K_{p-q} in the middle
            for (int r = 0; r < q_; ++r) w.at(r, n_ - 1 - r) = kI;
            for (int r = q_; r < p_; ++r) w.at(r, n_ - 1 - r) = kOne;
            for (int r = p_; r < n_; ++r) w.at(r, n_ - 1 - r) = kI;
            return GroupElement::matrix(std::move(w));
        }
        case Family::UStar:
            return GroupElement::matrix(mat_J(n_));
        case Family::SOEvenOdd: {
            std::vector<GaussianRational> d(size_t(ambient_), GaussianRational(0));
            for (int i = 0; i < 2 * n_; ++i) d[size_t(i)] = (i % 2 == 0) ? kOne : -kOne;
            d[size_t(ambient_ - 1)] = ((p_ + q_) % 2 == 0) ? kOne : -kOne;
            return GroupElement::matrix(ExactMatrix::diag(d));
        }
        case Family::Sp:
            return GroupElement::matrix(mat_Sprime(ambient_).scaled(kI));
        case Family::SpPQ:
            return GroupElement::matrix(mat_J(n_));
        case Family::SOEvenEven: {
            std::vector<GaussianRational> d(size_t(ambient_), GaussianRational(0));
            if (n_ % 2 == 0) {
                for (int i = 0; i < ambient_; ++i) d[size_t(i)] = (i % 2 == 0) ? kOne : -kOne;
            } else {
                for (int i = 0; i < 2 * (n_ - 1); ++i) d[size_t(i)] = (i % 2 == 0) ? kOne : -kOne;
                d[size_t(ambient_ - 2)] = kOne;
                d[size_t(ambient_ - 1)] = kOne;
            }
            return GroupElement::matrix(ExactMatrix::diag(d));
        }
        case Family::SOOddOdd: {
            if (n_ == 0) return GroupElement::matrix(ExactMatrix::identity(2));
            std::vector<GaussianRational> d(size_t(ambient_), GaussianRational(0));
            for (int i = 0; i < 2 * p_; ++i) d[size_t(i)] = (i % 2 == 0) ? kOne : -kOne;
            d[size_t(2 * p_)] = (p_ % 2 == 0) ? kOne : -kOne;
            d[size_t(2 * p_ + 1)] = (q_ % 2 == 0) ? kOne : -kOne;
            for (int i = 0; i < 2 * q_; ++i) d[size_t(2 * p_ + 2 + i)] = (i % 2 == 0) ? kOne : -kOne;
            return GroupElement::matrix(ExactMatrix::diag(d));
        }
        case Family::SOStar: {
            int half = ambient_ / 2;
            if (ambient_ % 4 == 0) {
                std::vector<GaussianRational> bd(static_cast<size_t>(ambient_), kI);
                for (int i = half; i < ambient_; ++i) bd[size_t(i)] = -kI;
                return GroupElement::res(ExactMatrix(ambient_, ambient_), ExactMatrix::diag(bd));
            }
            std::vector<GaussianRational> ad(size_t(ambient_), GaussianRational(0)), bd(size_t(ambient_), GaussianRational(0));
            ad[size_t(half - 1)] = kOne;
            ad[size_t(ambient_ - 1)] = kOne;
            for (int i = 0; i < half - 1; ++i) {
                bd[size_t(i)] = kI;
                bd[size_t(half + i)] = -kI;
            }
            return GroupElement::res(ExactMatrix::diag(ad), ExactMatrix::diag(bd));
        }
        case Family::Gq: {
            // w is specified in split coordinates; the corresponding point of
            // the form is the pair with components (w, I_q^{-1} (w^T)^{-1} I_q)
            ExactMatrix w(2, 2);
            w.at(0, 1) = kOne;
            w.at(1, 0) = -kOne;
            return backward(w);
        }
    }
    fail(Errc::invalid_params, "unexpected family");
}

std::vector<Cocharacter> StandardForm::ordered_basis() const {
    auto unit = [&](int i, long s = 1) {
        IntVec v(size_t(rank_), 0);
        v[size_t(i)] = s;
        return v;
    };
    std::vector<Cocharacter> basis;
    switch (family_) {
        case Family::GL:
            for (int i = 0; 2 * i + 1 < rank_; ++i) {
                IntVec v = unit(2 * i);
                v[size_t(2 * i + 1)] = -1;
                basis.push_back(Cocharacter{v});
            }
            break;
        case Family::UStar:
            for (int i = 0; i < n_; ++i) {
                IntVec v = unit(i);
                v[size_t(i + n_)] = -1;
                basis.push_back(Cocharacter{v});
            }
            break;
        case Family::SOOddOdd:
            for (int i = 0; i < rank_; ++i)
                if (i != p_) basis.push_back(Cocharacter{unit(i)});
            break;
        case Family::Gq: {
            IntVec v = unit(0);
            v[1] = -1;
            basis.push_back(Cocharacter{v});
            break;
        }
        default:
            for (int i = 0; i < rank_; ++i) basis.push_back(Cocharacter{unit(i)});
            break;
    }
    return basis;
}

GroupElement StandardForm::torus_point(const std::vector<GaussianRational>& units) const {
    if (int(units.size()) != rank_) fail(Errc::rank_mismatch, "torus_point needs `rank` units");
    for (const auto& u : units)
        if (u.is_zero()) fail(Errc::zero_entry, "torus parameters must be nonzero");
    switch (family_) {
        case Family::GL: {
            std::vector<ExactMatrix> blocks;
            for (int i = 0; 2 * i + 1 < rank_; ++i)
                blocks.push_back(gl_pair_block(units[size_t(2 * i)], units[size_t(2 * i + 1)]));
            if (rank_ % 2 == 1)
                blocks.push_back(ExactMatrix::diag({units[size_t(rank_ - 1)]}));
            return GroupElement::matrix(ExactMatrix::block_diag(blocks));
        }
        case Family::SOEvenOdd:
        case Family::SOEvenEven: {
            std::vector<ExactMatrix> blocks;
            for (int i = 0; i < n_; ++i) blocks.push_back(so2_block(units[size_t(i)]));
            if (family_ == Family::SOEvenOdd) blocks.push_back(ExactMatrix::identity(1));
            return GroupElement::matrix(ExactMatrix::block_diag(blocks));
        }
        case Family::SOOddOdd: {
            std::vector<ExactMatrix> blocks;
            for (int i = 0; i < p_; ++i) blocks.push_back(so2_block(units[size_t(i)]));
            blocks.push_back(so11_block(units[size_t(p_)]));
            for (int i = 0; i < q_; ++i) blocks.push_back(so2_block(units[size_t(p_ + 1 + i)]));
            return GroupElement::matrix(ExactMatrix::block_diag(blocks));
        }
        case Family::Sp:
        case Family::SOStar: {
            int half = res_ ? ambient_ / 2 : n_;
            ExactMatrix m(ambient_, ambient_);
            for (int i = 0; i < half; ++i) {
                GaussianRational a = (units[size_t(i)] + units[size_t(i)].inverse()) * kHalf;
                GaussianRational b = (units[size_t(i)] - units[size_t(i)].inverse()) * kInvTwoI;
                m.at(i, i) = a;
                m.at(i, i + half) = -b;
                m.at(i + half, i) = b;
                m.at(i + half, i + half) = a;
            }
            if (family_ == Family::SOStar)
                return GroupElement::res(std::move(m), ExactMatrix(ambient_, ambient_));
            return GroupElement::matrix(std::move(m));
        }
        case Family::Upq: {
            ExactMatrix a(ambient_, ambient_), b(ambient_, ambient_);
            for (int i = 0; i < n_; ++i) {
                a.at(i, i) = (units[size_t(i)] + units[size_t(i)].inverse()) * kHalf;
                b.at(i, i) = (units[size_t(i)] - units[size_t(i)].inverse()) * kInvTwoI;
            }
            return GroupElement::res(std::move(a), std::move(b));
        }
        case Family::SpPQ: {
            ExactMatrix a(ambient_, ambient_), b(ambient_, ambient_);
            for (int i = 0; i < n_; ++i) {
                GaussianRational av = (units[size_t(i)] + units[size_t(i)].inverse()) * kHalf;
                GaussianRational bv = (units[size_t(i)] - units[size_t(i)].inverse()) * kInvTwoI;
                a.at(i, i) = av;
                a.at(i + n_, i + n_) = av;
                b.at(i, i) = bv;
                b.at(i + n_, i + n_) = -bv;
            }
            return GroupElement::res(std::move(a), std::move(b));
        }
        case Family::UStar: {
            ExactMatrix a(ambient_, ambient_), b(ambient_, ambient_);
            for (int i = 0; i < n_; ++i) {
                GaussianRational av = (units[size_t(i)] + units[size_t(i + n_)]) * kHalf;
                GaussianRational bv = (units[size_t(i)] - units[size_t(i + n_)]) * kInvTwoI;
                a.at(i, i) = av;
                a.at(i + n_, i + n_) = av;
                b.at(i, i) = bv;
                b.at(i + n_, i + n_) = -bv;
            }
            return GroupElement::res(std::move(a), std::move(b));
        }
        case Family::Gq:
            return backward(ExactMatrix::diag({units[0], units[1]}));
    }
    fail(Errc::invalid_params, "unexpected family");
}

ExactMatrix StandardForm::hs_point(const std::vector<GaussianRational>& units) const {
    if (int(units.size()) != rank_) fail(Errc::rank_mismatch, "hs_point needs `rank` units");
    std::vector<GaussianRational> d(size_t(ambient_size(target_, rank_)), GaussianRational(0));
    switch (target_) {
        case SplitTarget::GL:
            for (int i = 0; i < rank_; ++i) d[size_t(i)] = units[size_t(i)];
            break;
        case SplitTarget::SO_odd:
            for (int i = 0; i < rank_; ++i) {
                d[size_t(2 * i)] = units[size_t(i)];
                d[size_t(2 * i + 1)] = units[size_t(i)].inverse();
            }
            d.back() = kOne;
            break;
        case SplitTarget::SO_even:
            for (int i = 0; i < rank_; ++i) {
                d[size_t(2 * i)] = units[size_t(i)];
                d[size_t(2 * i + 1)] = units[size_t(i)].inverse();
            }
            break;
        case SplitTarget::Sp:
        case SplitTarget::SOprime_even:
            for (int i = 0; i < rank_; ++i) {
                d[size_t(i)] = units[size_t(i)];
                d[size_t(i + rank_)] = units[size_t(i)].inverse();
            }
            break;
    }
    return ExactMatrix::diag(d);
}

std::vector<GaussianRational> StandardForm::read_hs_coordinates(const ExactMatrix& m) const {
    if (!m.is_diagonal()) fail(Errc::wbarw_not_in_torus, "matrix is not diagonal in split coordinates");
    std::vector<GaussianRational> out(size_t(rank_), GaussianRational(0));
    auto expect_inverse = [&](int i, int j) {
        if (m.at(i, i) * m.at(j, j) != kOne)
            fail(Errc::wbarw_not_in_torus, "diagonal entries are not an inverse pair");
    };
    switch (target_) {
        case SplitTarget::GL:
            for (int i = 0; i < rank_; ++i) out[size_t(i)] = m.at(i, i);
            break;
        case SplitTarget::SO_odd:
            for (int i = 0; i < rank_; ++i) {
                expect_inverse(2 * i, 2 * i + 1);
                out[size_t(i)] = m.at(2 * i, 2 * i);
            }
            if (m.at(m.rows() - 1, m.rows() - 1) != kOne)
                fail(Errc::wbarw_not_in_torus, "fixed entry of the torus moved");
            break;
        case SplitTarget::SO_even:
            for (int i = 0; i < rank_; ++i) {
                expect_inverse(2 * i, 2 * i + 1);
                out[size_t(i)] = m.at(2 * i, 2 * i);
            }
            break;
        case SplitTarget::Sp:
        case SplitTarget::SOprime_even:
            for (int i = 0; i < rank_; ++i) {
                expect_inverse(i, i + rank_);
                out[size_t(i)] = m.at(i, i);
            }
            break;
    }
    return out;
}

std::optional<IntVec> StandardForm::char_relation() const {
    if (family_ == Family::Gq) return IntVec{1, 1};
    return std::nullopt;
}

} // namespace fd
