#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "flagdescent/rational.hpp"

namespace fd {

// Dense matrix over Q(sqrt(-1)).  All arithmetic is exact; sizes stay small
// (ambient groups here never exceed a few dozen rows).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) fail(Errc::invalid_params, "negative matrix dimension");
    }

    static ExactMatrix identity(int n);
    static ExactMatrix diag(const std::vector<GaussianRational>& d);
    static ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const GaussianRational& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const GaussianRational& c) const;

    ExactMatrix transpose() const;
    ExactMatrix conj() const;            // entrywise conjugation
    ExactMatrix star() const;            // conjugate transpose
    ExactMatrix inverse() const;         // throws singular-matrix
    GaussianRational det() const;

    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_diagonal() const;
    bool is_zero() const;

    std::vector<GaussianRational> diagonal() const;
    bool entries_dyadic() const;         // every entry in Z[1/2,sqrt(-1)]

    std::string str() const;             // aligned pretty form for reports

private:
    int rows_, cols_;
    std::vector<GaussianRational> e_;
};

// The constant matrices the standard forms are built from.  S covers the
// even (S_2 blocks only) and odd (trailing 1) shapes, likewise g for the
// g_2-block conjugators with or without a trailing 1.
ExactMatrix mat_J(int n);                      // 2n x 2n, [[0, I], [-I, 0]]
ExactMatrix mat_S(int m);                      // diag(S_2,...,S_2[,1])
ExactMatrix mat_Sprime(int m);                 // odd: diag(1,S_2,...); even: [[0,I],[I,0]]
ExactMatrix mat_K(int n);                      // antidiagonal ones
ExactMatrix mat_w2();                          // diag(1,-1)
ExactMatrix mat_Ipq(int p, int q);             // diag(I_p, -I_q)
ExactMatrix mat_Ipqpq(int p, int q);           // diag(I_{p,q}, I_{p,q})
ExactMatrix mat_g2();                          // [[1,-i],[-i,1]]
ExactMatrix mat_g(int m);                      // diag(g_2,...,g_2[,1])
ExactMatrix mat_gprime(int m);                 // [[I, iI],[I/2, -iI/2]], m even
ExactMatrix mat_gpq(int p, int q);             // SO(p,q) conjugator, four parity cases

// Dispatcher used by tests and tooling; throws invalid-params on bad tags
// or parameters.  Tags: J S S' K w2 Ipq Ipqpq g2 g g' gpq.
ExactMatrix named_matrix(const std::string& tag, const std::vector<long>& params);

} // namespace fd
