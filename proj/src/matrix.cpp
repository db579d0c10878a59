#include "flagdescent/matrix.hpp"

#include <sstream>

namespace fd {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::diag(const std::vector<GaussianRational>& d) {
    ExactMatrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

ExactMatrix ExactMatrix::block_diag(const std::vector<ExactMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) fail(Errc::invalid_params, "block_diag needs square blocks");
        n += b.rows();
    }
    ExactMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::dimension_mismatch, "matrix product dimension mismatch");
    ExactMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += x * o.at(k, j);
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix sum dimension mismatch");
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix diff dimension mismatch");
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].conj();
    return out;
}

ExactMatrix ExactMatrix::star() const { return conj().transpose(); }

// Gauss-Jordan on [A | I]; pivot on the first nonzero entry of each column.
ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) fail(Errc::dimension_mismatch, "inverse of non-square matrix");
    int n = rows_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) fail(Errc::singular_matrix, "matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        GaussianRational s = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

GaussianRational ExactMatrix::det() const {
    if (!is_square()) fail(Errc::dimension_mismatch, "determinant of non-square matrix");
    int n = rows_;
    ExactMatrix a = *this;
    GaussianRational d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return GaussianRational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        GaussianRational s = a.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col) * s;
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return d;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != GaussianRational(i == j ? 1 : 0)) return false;
    return true;
}

bool ExactMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<GaussianRational> ExactMatrix::diagonal() const {
    std::vector<GaussianRational> d;
    for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back(at(i, i));
    return d;
}

bool ExactMatrix::entries_dyadic() const {
    for (const auto& x : e_)
        if (!classify_scalar(x).in_dyadic_gaussian) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::vector<std::string> cells(e_.size());
    size_t width = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
        cells[i] = e_[i].str();
        width = std::max(width, cells[i].size());
    }
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            const std::string& c = cells[size_t(i) * cols_ + j];
            os << std::string(width - c.size(), ' ') << c << (j + 1 < cols_ ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();

ExactMatrix s2() {
    ExactMatrix m(2, 2);
    m.at(0, 1) = kOne;
    m.at(1, 0) = kOne;
    return m;
}

ExactMatrix one_by_one(const GaussianRational& v) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = v;
    return m;
}

} // namespace

ExactMatrix mat_J(int n) {
    if (n < 1) fail(Errc::invalid_params, "J_n needs n >= 1");
    ExactMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i + n) = kOne;
        m.at(i + n, i) = -kOne;
    }
    return m;
}

ExactMatrix mat_S(int m) {
    if (m < 1) fail(Errc::invalid_params, "S_m needs m >= 1");
    std::vector<ExactMatrix> blocks(size_t(m / 2), s2());
    if (m % 2 == 1) blocks.push_back(one_by_one(kOne));
    return ExactMatrix::block_diag(blocks);
}

ExactMatrix mat_Sprime(int m) {
    if (m < 1) fail(Errc::invalid_params, "S'_m needs m >= 1");
    if (m % 2 == 1) {
        std::vector<ExactMatrix> blocks{one_by_one(kOne)};
        for (int i = 0; i < m / 2; ++i) blocks.push_back(s2());
        return ExactMatrix::block_diag(blocks);
    }
    int n = m / 2;
    ExactMatrix out(m, m);
    for (int i = 0; i < n; ++i) {
        out.at(i, i + n) = kOne;
        out.at(i + n, i) = kOne;
    }
    return out;
}

ExactMatrix mat_K(int n) {
    if (n < 0) fail(Errc::invalid_params, "K_n needs n >= 0");
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = kOne;
    return m;
}

ExactMatrix mat_w2() {
    return ExactMatrix::diag({kOne, -kOne});
}

ExactMatrix mat_Ipq(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) fail(Errc::invalid_params, "I_{p,q} needs p,q >= 0, p+q >= 1");
    std::vector<GaussianRational> d(size_t(p + q), kOne);
    for (int i = p; i < p + q; ++i) d[size_t(i)] = -kOne;
    return ExactMatrix::diag(d);
}

ExactMatrix mat_Ipqpq(int p, int q) {
    ExactMatrix b = mat_Ipq(p, q);
    return ExactMatrix::block_diag({b, b});
}

ExactMatrix mat_g2() {
    ExactMatrix m(2, 2);
    m.at(0, 0) = kOne;
    m.at(0, 1) = -kI;
    m.at(1, 0) = -kI;
    m.at(1, 1) = kOne;
    return m;
}

ExactMatrix mat_g(int m) {
    if (m < 1) fail(Errc::invalid_params, "g_m needs m >= 1");
    std::vector<ExactMatrix> blocks(size_t(m / 2), mat_g2());
    if (m % 2 == 1) blocks.push_back(one_by_one(kOne));
    return ExactMatrix::block_diag(blocks);
}

ExactMatrix mat_gprime(int m) {
    if (m < 2 || m % 2 != 0) fail(Errc::invalid_params, "g'_m needs even m >= 2");
    int n = m / 2;
    ExactMatrix out(m, m);
    GaussianRational half(Rational(1, 2));
    for (int i = 0; i < n; ++i) {
        out.at(i, i) = kOne;
        out.at(i, i + n) = kI;
        out.at(i + n, i) = half;
        out.at(i + n, i + n) = -kI * half;
    }
    return out;
}

ExactMatrix mat_gpq(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) fail(Errc::invalid_params, "g_{p,q} needs p,q >= 0, p+q >= 1");
    ExactMatrix ig2 = mat_g2().scaled(kI);
    std::vector<ExactMatrix> blocks;
    if (p % 2 == 0 && q % 2 == 0) {
        for (int i = 0; i < p / 2; ++i) blocks.push_back(mat_g2());
        for (int i = 0; i < q / 2; ++i) blocks.push_back(ig2);
    } else if (p % 2 == 0 && q % 2 == 1) {
        for (int i = 0; i < p / 2; ++i) blocks.push_back(mat_g2());
        for (int i = 0; i < (q - 1) / 2; ++i) blocks.push_back(ig2);
        blocks.push_back(one_by_one(kI));
    } else if (p % 2 == 1 && q % 2 == 0) {
        blocks.push_back(one_by_one(kOne));
        for (int i = 0; i < (p - 1) / 2; ++i) blocks.push_back(mat_g2());
        for (int i = 0; i < q / 2; ++i) blocks.push_back(ig2);
    } else {
        for (int i = 0; i < (p - 1) / 2; ++i) blocks.push_back(mat_g2());
        ExactMatrix mid(2, 2);
        mid.at(0, 0) = kOne;
        mid.at(0, 1) = kOne;
        mid.at(1, 0) = kI;
        mid.at(1, 1) = -kI;
        blocks.push_back(mid);
        for (int i = 0; i < (q - 1) / 2; ++i) blocks.push_back(ig2);
    }
    return ExactMatrix::block_diag(blocks);
}

ExactMatrix named_matrix(const std::string& tag, const std::vector<long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            fail(Errc::invalid_params, "matrix tag '" + tag + "' takes " + std::to_string(k) + " parameter(s)");
    };
    auto as_int = [&](size_t idx) { return static_cast<int>(params[idx]); };
    if (tag == "J") { need(1); return mat_J(as_int(0)); }
    if (tag == "S") { need(1); return mat_S(as_int(0)); }
    if (tag == "S'") { need(1); return mat_Sprime(as_int(0)); }
    if (tag == "K") { need(1); return mat_K(as_int(0)); }
    if (tag == "w2") { need(0); return mat_w2(); }
    if (tag == "Ipq") { need(2); return mat_Ipq(as_int(0), as_int(1)); }
    if (tag == "Ipqpq") { need(2); return mat_Ipqpq(as_int(0), as_int(1)); }
    if (tag == "g2") { need(0); return mat_g2(); }
    if (tag == "g") { need(1); return mat_g(as_int(0)); }
    if (tag == "g'") { need(1); return mat_gprime(as_int(0)); }
    if (tag == "gpq") { need(2); return mat_gpq(as_int(0), as_int(1)); }
    fail(Errc::invalid_params, "unknown matrix tag '" + tag + "'");
}

} // namespace fd
