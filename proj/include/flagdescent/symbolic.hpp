#pragma once

#include <map>

#include "flagdescent/matrix.hpp"
#include "flagdescent/monomial.hpp"

namespace fd {

// Laurent polynomial in formal torus coordinates a_1..a_r with coefficients
// in Q(sqrt(-1)), kept as exponent-vector -> coefficient with no zero terms.
// Torus conjugation happens in this ring, so the induced action on the
// character lattice is read off exactly from exponents.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const GaussianRational& c, int nvars);
    static LaurentPoly variable(int idx, int nvars, long power = 1);

    bool is_zero() const { return terms_.empty(); }
    // c * prod a_i^{m_i} with c nonzero?
    bool is_monomial() const { return terms_.size() == 1; }
    const std::map<IntVec, GaussianRational>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const GaussianRational& c) const;
    LaurentPoly conj_coeffs() const;
    LaurentPoly inverse_monomial() const; // throws unless monomial

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    void add_term(const IntVec& exp, const GaussianRational& c);

private:
    std::map<IntVec, GaussianRational> terms_;
};

class SymMatrix {
public:
    SymMatrix() : rows_(0), cols_(0), nvars_(0) {}
    SymMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), e_(size_t(rows) * cols) {}

    static SymMatrix from_const(const ExactMatrix& m, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    LaurentPoly& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    SymMatrix operator*(const SymMatrix& o) const;
    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-(const SymMatrix& o) const;
    SymMatrix scaled(const GaussianRational& c) const;
    SymMatrix scaled_poly(const LaurentPoly& c) const;
    SymMatrix transpose() const;
    SymMatrix conj_coeffs() const;
    // Inverse of a matrix with exactly one (monomial) entry per row/column.
    SymMatrix inverse_monomial() const;

    bool is_diagonal() const;

private:
    int rows_, cols_, nvars_;
    std::vector<LaurentPoly> e_;
};

// The generic point of the diagonal torus H_s in split coordinates, with one
// formal variable per e_i-coordinate.
SymMatrix sym_torus_point(SplitTarget target, int rank);

// Reads the signed permutation lambda -> exponents from a conjugated torus
// point; throws not-in-normalizer if the matrix is not again a generic torus
// point with coefficient-1 monomial coordinates.
MonomialAction read_torus_action(const SymMatrix& m, SplitTarget target, int rank);

} // namespace fd
