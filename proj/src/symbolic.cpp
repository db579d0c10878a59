#include "flagdescent/symbolic.hpp"

namespace fd {

LaurentPoly LaurentPoly::constant(const GaussianRational& c, int nvars) {
    LaurentPoly p;
    p.add_term(IntVec(size_t(nvars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int idx, int nvars, long power) {
    IntVec exp(size_t(nvars), 0);
    exp[size_t(idx)] = power;
    LaurentPoly p;
    p.add_term(exp, GaussianRational(1));
    return p;
}

void LaurentPoly::add_term(const IntVec& exp, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [exp, c] : o.terms_) out.add_term(exp, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [exp, c] : o.terms_) out.add_term(exp, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            IntVec exp(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) exp[i] = ea[i] + eb[i];
            out.add_term(exp, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
    LaurentPoly out;
    for (const auto& [exp, v] : terms_) out.add_term(exp, v * c);
    return out;
}

LaurentPoly LaurentPoly::conj_coeffs() const {
    LaurentPoly out;
    for (const auto& [exp, v] : terms_) out.add_term(exp, v.conj());
    return out;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
    if (!is_monomial()) fail(Errc::not_in_normalizer, "inverting a non-monomial symbolic entry");
    const auto& [exp, c] = *terms_.begin();
    IntVec ie(exp.size());
    for (size_t i = 0; i < exp.size(); ++i) ie[i] = -exp[i];
    LaurentPoly out;
    out.add_term(ie, c.inverse());
    return out;
}

SymMatrix SymMatrix::from_const(const ExactMatrix& m, int nvars) {
    SymMatrix out(m.rows(), m.cols(), nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) out.at(i, j) = LaurentPoly::constant(m.at(i, j), nvars);
    return out;
}

SymMatrix SymMatrix::operator*(const SymMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::dimension_mismatch, "symbolic product dimension mismatch");
    SymMatrix out(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LaurentPoly& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + x * o.at(k, j);
            }
        }
    return out;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "symbolic sum mismatch");
    SymMatrix out(rows_, cols_, nvars_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "symbolic diff mismatch");
    SymMatrix out(rows_, cols_, nvars_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

SymMatrix SymMatrix::scaled(const GaussianRational& c) const {
    SymMatrix out(rows_, cols_, nvars_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].scaled(c);
    return out;
}

SymMatrix SymMatrix::scaled_poly(const LaurentPoly& c) const {
    SymMatrix out(rows_, cols_, nvars_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

SymMatrix SymMatrix::transpose() const {
    SymMatrix out(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

SymMatrix SymMatrix::conj_coeffs() const {
    SymMatrix out(rows_, cols_, nvars_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].conj_coeffs();
    return out;
}

SymMatrix SymMatrix::inverse_monomial() const {
    if (rows_ != cols_) fail(Errc::dimension_mismatch, "inverse of non-square symbolic matrix");
    SymMatrix out(rows_, cols_, nvars_);
    std::vector<bool> col_seen(size_t(cols_), false);
    for (int i = 0; i < rows_; ++i) {
        int nz = -1;
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            if (nz >= 0) fail(Errc::not_in_normalizer, "symbolic matrix is not monomial");
            nz = j;
        }
        if (nz < 0 || col_seen[size_t(nz)])
            fail(Errc::not_in_normalizer, "symbolic matrix is not monomial");
        col_seen[size_t(nz)] = true;
        out.at(nz, i) = at(i, nz).inverse_monomial();
    }
    return out;
}

bool SymMatrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

SymMatrix sym_torus_point(SplitTarget target, int rank) {
    int n = ambient_size(target, rank);
    SymMatrix m(n, n, rank);
    auto var = [&](int idx, long pw) { return LaurentPoly::variable(idx, rank, pw); };
    switch (target) {
        case SplitTarget::GL:
            for (int i = 0; i < rank; ++i) m.at(i, i) = var(i, 1);
            break;
        case SplitTarget::SO_odd:
            for (int i = 0; i < rank; ++i) {
                m.at(2 * i, 2 * i) = var(i, 1);
                m.at(2 * i + 1, 2 * i + 1) = var(i, -1);
            }
            m.at(n - 1, n - 1) = LaurentPoly::constant(GaussianRational(1), rank);
            break;
        case SplitTarget::SO_even:
            for (int i = 0; i < rank; ++i) {
                m.at(2 * i, 2 * i) = var(i, 1);
                m.at(2 * i + 1, 2 * i + 1) = var(i, -1);
            }
            break;
        case SplitTarget::Sp:
        case SplitTarget::SOprime_even:
            for (int i = 0; i < rank; ++i) {
                m.at(i, i) = var(i, 1);
                m.at(i + rank, i + rank) = var(i, -1);
            }
            break;
    }
    return m;
}

namespace {

// Positions of the e_i coordinate and (if any) its forced-inverse partner.
void coordinate_positions(SplitTarget target, int rank, int i, int& main_pos, int& partner_pos) {
    switch (target) {
        case SplitTarget::GL:
            main_pos = i;
            partner_pos = -1;
            return;
        case SplitTarget::SO_odd:
        case SplitTarget::SO_even:
            main_pos = 2 * i;
            partner_pos = 2 * i + 1;
            return;
        case SplitTarget::Sp:
        case SplitTarget::SOprime_even:
            main_pos = i;
            partner_pos = i + rank;
            return;
    }
    main_pos = partner_pos = -1;
}

} // namespace

MonomialAction read_torus_action(const SymMatrix& m, SplitTarget target, int rank) {
    if (!m.is_diagonal()) fail(Errc::not_in_normalizer, "conjugate left the diagonal torus");
    MonomialAction act = MonomialAction::identity(rank);
    for (int i = 0; i < rank; ++i) {
        int main_pos, partner_pos;
        coordinate_positions(target, rank, i, main_pos, partner_pos);
        const LaurentPoly& entry = m.at(main_pos, main_pos);
        if (!entry.is_monomial()) fail(Errc::not_in_normalizer, "torus coordinate is not a monomial");
        const auto& [exp, coeff] = *entry.terms().begin();
        if (!coeff.is_one()) fail(Errc::not_in_normalizer, "torus coordinate has a nontrivial coefficient");
        int idx = -1;
        long sgn = 0;
        for (size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] == 0) continue;
            if (idx >= 0 || (exp[k] != 1 && exp[k] != -1))
                fail(Errc::not_in_normalizer, "torus coordinate is not a signed coordinate");
            idx = int(k);
            sgn = exp[k];
        }
        if (idx < 0) fail(Errc::not_in_normalizer, "torus coordinate became constant");
        if (partner_pos >= 0) {
            if (!(m.at(partner_pos, partner_pos) == entry.inverse_monomial()))
                fail(Errc::not_in_normalizer, "paired torus coordinates are not inverse");
        }
        act.target[size_t(i)] = idx;
        act.sign[size_t(i)] = int(sgn);
    }
    // extra fixed entries (the final 1 of the odd orthogonal torus) must stay 1
    if (target == SplitTarget::SO_odd) {
        int n = m.rows();
        if (!(m.at(n - 1, n - 1) == LaurentPoly::constant(GaussianRational(1), rank)))
            fail(Errc::not_in_normalizer, "fixed torus entry moved");
    }
    return act;
}

} // namespace fd
