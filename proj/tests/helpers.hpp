#pragma once

// Shared fixtures: a deterministic RNG, the closed-form per-family data
// frozen as test expectations, and a Weyl-group enumeration oracle.

#include <cstdint>
#include <set>
#include <vector>

#include "flagdescent/descent.hpp"

namespace testutil {

using namespace fd;

// xorshift; deterministic across platforms
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}
    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    long range(long lo, long hi) { // inclusive
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline Rational random_rational(Rng& rng) {
    long num = rng.range(-12, 12);
    long den = rng.range(1, 9);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline GaussianRational random_scalar(Rng& rng) {
    return GaussianRational(random_rational(rng), random_rational(rng));
}

inline GaussianRational random_nonzero_scalar(Rng& rng) {
    while (true) {
        GaussianRational z = random_scalar(rng);
        if (!z.is_zero()) return z;
    }
}

// units of Z[1/2, sqrt(-1)]
inline std::vector<GaussianRational> unit_pool() {
    GaussianRational i = GaussianRational::i();
    GaussianRational one(1);
    return {one,
            -one,
            i,
            -i,
            GaussianRational(2),
            GaussianRational(Rational(1, 2)),
            GaussianRational(Rational(1), Rational(1)),          // 1 + i
            GaussianRational(Rational(1, 2), Rational(-1, 2)),   // (1 - i)/2
            GaussianRational(-2) * i};
}

inline std::vector<GaussianRational> random_units(Rng& rng, int count) {
    auto pool = unit_pool();
    std::vector<GaussianRational> out;
    for (int k = 0; k < count; ++k) out.push_back(pool[size_t(rng.next() % pool.size())]);
    return out;
}

// ---- closed-form per-family expectations ----------------------------------

inline IntVec unit_vec(int rank, int i, long s = 1) {
    IntVec v(size_t(rank), 0);
    v[size_t(i)] = s;
    return v;
}

inline IntVec diff_vec(int rank, int i, int j, long si = 1, long sj = -1) {
    IntVec v(size_t(rank), 0);
    v[size_t(i)] += si;
    v[size_t(j)] += sj;
    return v;
}

// The simple system of each family in e_i coordinates (indices 0-based).
inline std::set<IntVec> expected_pi(const StandardForm& f) {
    std::set<IntVec> out;
    int r = f.rank();
    switch (f.family()) {
        case Family::GL: {
            int n = r / 2;
            if (r % 2 == 1) {
                for (int i = 1; i <= n; ++i) out.insert(diff_vec(r, 2 * i - 2, 2 * i));
                for (int i = 1; i <= n - 1; ++i) out.insert(diff_vec(r, 2 * i - 1, 2 * i + 1, -1, 1));
                if (n >= 1) out.insert(diff_vec(r, 2 * n - 1, 2 * n, -1, 1));
            } else {
                for (int i = 1; i <= n - 1; ++i) {
                    out.insert(diff_vec(r, 2 * i - 2, 2 * i));
                    out.insert(diff_vec(r, 2 * i - 1, 2 * i + 1, -1, 1));
                }
                if (n >= 1) out.insert(diff_vec(r, 2 * n - 2, 2 * n - 1));
            }
            break;
        }
        case Family::Upq:
        case Family::Gq:
            for (int i = 0; i + 1 < r; ++i) out.insert(diff_vec(r, i, i + 1));
            break;
        case Family::UStar: {
            int n = r / 2;
            for (int i = 0; i + 1 < n; ++i) out.insert(diff_vec(r, i, i + 1));
            out.insert(diff_vec(r, n - 1, 2 * n - 1));
            for (int i = n; i + 1 < 2 * n; ++i) out.insert(diff_vec(r, i, i + 1, -1, 1));
            break;
        }
        case Family::SOEvenOdd:
            for (int i = 0; i + 1 < r; ++i) out.insert(diff_vec(r, i, i + 1));
            if (r >= 1) out.insert(unit_vec(r, r - 1));
            break;
        case Family::Sp:
        case Family::SpPQ:
            for (int i = 0; i + 1 < r; ++i) out.insert(diff_vec(r, i, i + 1));
            if (r >= 1) out.insert(unit_vec(r, r - 1, 2));
            break;
        case Family::SOEvenEven:
        case Family::SOStar:
            if (r >= 2) {
                for (int i = 0; i + 1 < r; ++i) out.insert(diff_vec(r, i, i + 1));
                out.insert(diff_vec(r, r - 2, r - 1, 1, 1));
            }
            break;
        case Family::SOOddOdd: {
            int n = f.n(), p = f.p();
            if (n == 0) break;
            // rank n+1, the (p+1)-st coordinate is the split direction
            for (int i = 1; i <= n; ++i)
                if (i != p && i != p + 1) out.insert(diff_vec(r, i - 1, i));
            if (p != 0 && p != n) out.insert(diff_vec(r, p - 1, p + 1));
            if (p == n) {
                out.insert(diff_vec(r, n - 1, n));
                out.insert(diff_vec(r, n - 1, n, 1, 1));
            } else {
                out.insert(diff_vec(r, n, p, 1, -1));
                out.insert(diff_vec(r, n, p, 1, 1));
            }
            break;
        }
    }
    return out;
}

// closed form of the Galois action on characters
inline MonomialAction expected_galois(const StandardForm& f) {
    int r = f.rank();
    MonomialAction a = MonomialAction::identity(r);
    auto negate_all = [&]() {
        for (int i = 0; i < r; ++i) a.sign[size_t(i)] = -1;
    };
    switch (f.family()) {
        case Family::GL:
            for (int i = 0; i + 1 < r; i += 2) {
                a.target[size_t(i)] = i + 1;
                a.target[size_t(i + 1)] = i;
            }
            break;
        case Family::UStar: {
            int n = r / 2;
            for (int i = 0; i < n; ++i) {
                a.target[size_t(i)] = i + n;
                a.target[size_t(i + n)] = i;
            }
            break;
        }
        case Family::SOOddOdd:
            negate_all();
            a.sign[size_t(f.p())] = 1;
            break;
        default:
            negate_all();
            break;
    }
    a.conj = true;
    return a;
}

inline MonomialAction expected_w_action_even_oddodd(const StandardForm& f) {
    MonomialAction a = expected_galois(f);
    a.conj = false;
    return a;
}

// closed form of the action of the catalogued w on characters
inline MonomialAction expected_w_action(const StandardForm& f) {
    int r = f.rank();
    MonomialAction a = MonomialAction::identity(r);
    auto negate_all = [&]() {
        for (int i = 0; i < r; ++i) a.sign[size_t(i)] = -1;
    };
    switch (f.family()) {
        case Family::GL:
        case Family::UStar:
            return expected_galois(f); // w lambda = conj(lambda) for these
        case Family::Upq:
            for (int i = 0; i < r; ++i) a.target[size_t(i)] = r - 1 - i;
            break;
        case Family::Gq: {
            a.target = {1, 0};
            break;
        }
        case Family::SOEvenOdd:
        case Family::Sp:
        case Family::SpPQ:
            negate_all();
            break;
        case Family::SOEvenEven:
            negate_all();
            if (f.n() % 2 == 1) a.sign[size_t(r - 1)] = 1;
            break;
        case Family::SOOddOdd:
            if (f.n() % 2 == 0) return expected_w_action_even_oddodd(f);
            negate_all();
            break;
        case Family::SOStar:
            negate_all();
            if (f.ambient() % 4 != 0) a.sign[size_t(r - 1)] = 1;
            break;
    }
    a.conj = false;
    return a;
}

struct DynkinCounts {
    int base = 0;
    int extension = 0;
};

// Dynkin scheme component counts (Spec Z[1/2] and Spec Z[1/2,i] factors).
inline DynkinCounts expected_dynkin(const StandardForm& f) {
    int n = f.n();
    switch (f.family()) {
        case Family::GL: return {f.rank() - 1, 0};
        case Family::Upq:
            if (n % 2 == 0) return {1, n / 2 - 1};
            return {0, (n - 1) / 2};
        case Family::UStar: return {2 * n - 1, 0};
        case Family::SOEvenOdd: return {n, 0};
        case Family::Sp:
        case Family::SpPQ: return {n, 0};
        case Family::SOEvenEven:
            if (n == 1) return {0, 0};
            if (n % 2 == 0) return {n, 0};
            return {n - 2, 1};
        case Family::SOOddOdd:
            if (n == 0) return {0, 0};
            if (n % 2 == 0) return {n + 1, 0};
            return {n - 1, 1};
        case Family::SOStar: {
            int r = f.rank();
            if (f.ambient() % 4 == 0) return {r, 0};
            if (r == 1) return {0, 0};
            return {r - 2, 1};
        }
        case Family::Gq: return {1, 0};
    }
    return {};
}

// coordinates entering the parity condition lambda(wbar w) = (-1)^{sum}
inline IntVec expected_parity_mask(const StandardForm& f) {
    int r = f.rank();
    IntVec mask(size_t(r), 0);
    switch (f.family()) {
        case Family::UStar:
        case Family::SpPQ:
            for (int i = 0; i < r; ++i) mask[size_t(i)] = 1;
            break;
        case Family::SOStar:
            if (f.ambient() % 4 == 0)
                for (int i = 0; i < r; ++i) mask[size_t(i)] = 1;
            else
                for (int i = 0; i + 1 < r; ++i) mask[size_t(i)] = 1;
            break;
        default:
            break;
    }
    return mask;
}

// every valid parameter assignment with n <= 4, p,q <= 3 (the desk-scale
// sweep the closed forms are checked over)
inline std::vector<StandardForm> standard_sweep() {
    std::vector<StandardForm> out;
    auto add = [&](const std::string& spec) { out.push_back(StandardForm::parse(spec)); };
    for (int m = 1; m <= 9; ++m) add("gl:" + std::to_string(m));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= p; ++q)
            if (p + q >= 1) add("u:" + std::to_string(p) + "," + std::to_string(q));
    for (int n = 1; n <= 4; ++n) add("u-star:" + std::to_string(2 * n));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            add("so:" + std::to_string(2 * p) + "," + std::to_string(2 * q + 1));
            add("so:" + std::to_string(2 * p + 1) + "," + std::to_string(2 * q + 1));
            if (p + q >= 1) add("so:" + std::to_string(2 * p) + "," + std::to_string(2 * q));
        }
    for (int n = 1; n <= 4; ++n) add("sp:" + std::to_string(n));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            if (p + q >= 1) add("sp-pq:" + std::to_string(p) + "," + std::to_string(q));
    for (int m = 2; m <= 10; m += 2) add("so-star:" + std::to_string(m));
    return out;
}

// ---- Weyl group oracle ----------------------------------------------------

using Matrix = std::vector<IntVec>;

inline Matrix action_matrix(const MonomialAction& a) { return a.matrix(); }

inline IntVec mat_apply(const Matrix& m, const IntVec& v) {
    IntVec out(v.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Enumerates the Weyl group generated by the simple reflections of `pi`,
// as matrices acting on the character lattice.
inline std::set<Matrix> enumerate_weyl(const std::vector<Root>& pi, int rank) {
    std::vector<Matrix> gens;
    for (const Root& alpha : pi) {
        Matrix m(size_t(rank), IntVec(size_t(rank), 0));
        for (int j = 0; j < rank; ++j) {
            IntVec ej = unit_vec(rank, j);
            long pair = 0;
            for (int k = 0; k < rank; ++k) pair += alpha.coroot.c[size_t(k)] * ej[size_t(k)];
            for (int i = 0; i < rank; ++i)
                m[size_t(i)][size_t(j)] = ej[size_t(i)] - pair * alpha.root.c[size_t(i)];
        }
        gens.push_back(std::move(m));
    }
    Matrix id(size_t(rank), IntVec(size_t(rank), 0));
    for (int i = 0; i < rank; ++i) id[size_t(i)][size_t(i)] = 1;
    std::set<Matrix> group{id};
    std::vector<Matrix> frontier{id};
    while (!frontier.empty()) {
        Matrix cur = frontier.back();
        frontier.pop_back();
        for (const Matrix& g : gens) {
            Matrix nxt = mat_mul(g, cur);
            if (group.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return group;
}

} // namespace testutil
