#include "flagdescent/rootdata.hpp"

#include <algorithm>
#include <set>

namespace fd {

const char* split_target_name(SplitTarget t) {
    switch (t) {
        case SplitTarget::GL: return "GL";
        case SplitTarget::SO_odd: return "SO_odd";
        case SplitTarget::Sp: return "Sp";
        case SplitTarget::SO_even: return "SO_even";
        case SplitTarget::SOprime_even: return "SO_prime_even";
    }
    return "?";
}

int ambient_size(SplitTarget t, int rank) {
    switch (t) {
        case SplitTarget::GL: return rank;
        case SplitTarget::SO_odd: return 2 * rank + 1;
        case SplitTarget::Sp: return 2 * rank;
        case SplitTarget::SO_even: return 2 * rank;
        case SplitTarget::SOprime_even: return 2 * rank;
    }
    return 0;
}

Character Character::operator+(const Character& o) const {
    if (c.size() != o.c.size()) fail(Errc::rank_mismatch, "character rank mismatch");
    Character out = *this;
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
    return out;
}

Character Character::operator-() const {
    Character out = *this;
    for (auto& v : out.c) v = -v;
    return out;
}

long pairing(const Cocharacter& mu, const Character& lam) {
    if (mu.c.size() != lam.c.size()) fail(Errc::rank_mismatch, "pairing rank mismatch");
    long acc = 0;
    for (size_t i = 0; i < mu.c.size(); ++i) acc += mu.c[i] * lam.c[i];
    return acc;
}

namespace {

IntVec unit(int rank, int i, long s = 1) {
    IntVec v(size_t(rank), 0);
    v[size_t(i)] = s;
    return v;
}

Root make_root(IntVec r, IntVec cr) { return Root{Character{std::move(r)}, Cocharacter{std::move(cr)}}; }

} // namespace

RootDatum build_root_datum(SplitTarget target, int rank) {
    if (rank < 0) fail(Errc::invalid_params, "negative rank");
    RootDatum d{target, rank, {}};
    auto add_diff = [&](int i, int j) { // e_i - e_j, coroot eps_i - eps_j
        IntVec r = unit(rank, i);
        r[size_t(j)] -= 1;
        d.roots.push_back(make_root(r, r));
    };
    auto add_sum_pair = [&](int i, int j) { // +-(e_i + e_j), coroot eps_i + eps_j
        IntVec r = unit(rank, i);
        r[size_t(j)] += 1;
        d.roots.push_back(make_root(r, r));
        IntVec nr = r;
        for (auto& v : nr) v = -v;
        d.roots.push_back(make_root(nr, nr));
    };
    switch (target) {
        case SplitTarget::GL: // type A_{rank-1}
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    if (i != j) add_diff(i, j);
            break;
        case SplitTarget::SO_odd: // type B_rank
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    add_diff(i, j);
                    add_diff(j, i);
                    add_sum_pair(i, j);
                }
            for (int i = 0; i < rank; ++i) { // +-e_i, coroot +-2 eps_i
                d.roots.push_back(make_root(unit(rank, i), unit(rank, i, 2)));
                d.roots.push_back(make_root(unit(rank, i, -1), unit(rank, i, -2)));
            }
            break;
        case SplitTarget::Sp: // type C_rank
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    add_diff(i, j);
                    add_diff(j, i);
                    add_sum_pair(i, j);
                }
            for (int i = 0; i < rank; ++i) { // +-2e_i, coroot +-eps_i
                d.roots.push_back(make_root(unit(rank, i, 2), unit(rank, i)));
                d.roots.push_back(make_root(unit(rank, i, -2), unit(rank, i, -1)));
            }
            break;
        case SplitTarget::SO_even:
        case SplitTarget::SOprime_even: // type D_rank
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    add_diff(i, j);
                    add_diff(j, i);
                    add_sum_pair(i, j);
                }
            break;
    }
    return d;
}

std::vector<Root> lex_positive_system(const RootDatum& datum, const std::vector<Cocharacter>& ordered_basis) {
    std::vector<Root> positive;
    for (const Root& alpha : datum.roots) {
        long first = 0;
        for (const Cocharacter& eps : ordered_basis) {
            first = pairing(eps, alpha.root);
            if (first != 0) break;
        }
        if (first == 0)
            fail(Errc::degenerate_basis, "a root pairs to zero with every basis element");
        if (first > 0) positive.push_back(alpha);
    }
    if (2 * positive.size() != datum.roots.size())
        fail(Errc::degenerate_basis, "positive system does not halve the root set");
    return positive;
}

std::vector<Root> simple_system(const std::vector<Root>& positive) {
    std::set<IntVec> pos;
    for (const Root& r : positive) pos.insert(r.root.c);
    auto decomposable = [&](const IntVec& v) {
        for (const Root& b : positive) {
            IntVec rest(v.size());
            bool zero = true;
            for (size_t i = 0; i < v.size(); ++i) {
                rest[i] = v[i] - b.root.c[i];
                if (rest[i] != 0) zero = false;
            }
            if (zero) continue; // v = b itself
            if (pos.count(rest)) return true;
        }
        return false;
    };
    std::vector<Root> simple;
    for (const Root& r : positive)
        if (!decomposable(r.root.c)) simple.push_back(r);
    // Every positive root must be reachable from the simples by adding one
    // simple root at a time; a set that is not a genuine positive system
    // leaves stragglers.
    std::set<IntVec> reachable;
    for (const Root& s : simple) reachable.insert(s.root.c);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const IntVec& r : pos) {
            if (reachable.count(r)) continue;
            for (const Root& s : simple) {
                IntVec rest(r.size());
                for (size_t i = 0; i < r.size(); ++i) rest[i] = r[i] - s.root.c[i];
                if (reachable.count(rest)) {
                    reachable.insert(r);
                    grew = true;
                    break;
                }
            }
        }
    }
    if (reachable.size() != pos.size())
        fail(Errc::not_positive_system, "input is not closed as a positive system");
    // the simples of a genuine positive system are linearly independent
    if (!simple.empty()) {
        int rank = simple[0].root.rank();
        std::vector<IntVec> columns(size_t(rank), IntVec(simple.size(), 0));
        for (size_t j = 0; j < simple.size(); ++j)
            for (int d = 0; d < rank; ++d) columns[size_t(d)][j] = simple[j].root.c[size_t(d)];
        if (!integer_kernel(columns, int(simple.size())).empty())
            fail(Errc::not_positive_system, "indecomposable elements are linearly dependent");
    }
    std::sort(simple.begin(), simple.end(),
              [](const Root& a, const Root& b) { return a.root.c < b.root.c; });
    return simple;
}

std::vector<IntVec> parabolic_char_lattice(const std::vector<Root>& pi_prime, int rank) {
    std::vector<IntVec> rows;
    for (const Root& alpha : pi_prime) {
        if (alpha.coroot.rank() != rank) fail(Errc::rank_mismatch, "coroot rank mismatch");
        rows.push_back(alpha.coroot.c);
    }
    return integer_kernel(rows, rank);
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int cols) {
    // Row-reduce [rows^T | I] over Z; rows of the right block whose left block
    // vanished form a basis of the kernel lattice.
    int m = int(rows.size());
    int width = m + cols;
    std::vector<std::vector<Integer>> t(size_t(cols), std::vector<Integer>(size_t(width), 0));
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < m; ++j) {
            if (int(rows[size_t(j)].size()) != cols) fail(Errc::rank_mismatch, "kernel row length mismatch");
            t[size_t(i)][size_t(j)] = rows[size_t(j)][size_t(i)];
        }
        t[size_t(i)][size_t(m + i)] = 1;
    }
    int pivot_row = 0;
    for (int col = 0; col < m && pivot_row < cols; ++col) {
        // clear the column below pivot_row by gcd steps
        while (true) {
            int best = -1;
            for (int r = pivot_row; r < cols; ++r)
                if (t[size_t(r)][size_t(col)] != 0 &&
                    (best < 0 || abs(t[size_t(r)][size_t(col)]) < abs(t[size_t(best)][size_t(col)])))
                    best = r;
            if (best < 0) break;
            std::swap(t[size_t(pivot_row)], t[size_t(best)]);
            bool done = true;
            for (int r = pivot_row + 1; r < cols; ++r) {
                if (t[size_t(r)][size_t(col)] == 0) continue;
                Integer f = t[size_t(r)][size_t(col)] / t[size_t(pivot_row)][size_t(col)];
                for (int j = 0; j < width; ++j) t[size_t(r)][size_t(j)] -= f * t[size_t(pivot_row)][size_t(j)];
                if (t[size_t(r)][size_t(col)] != 0) done = false;
            }
            if (done) {
                ++pivot_row;
                break;
            }
        }
    }
    std::vector<IntVec> kernel;
    for (int r = 0; r < cols; ++r) {
        bool zero = true;
        for (int j = 0; j < m; ++j)
            if (t[size_t(r)][size_t(j)] != 0) { zero = false; break; }
        if (!zero) continue;
        IntVec v(size_t(cols), 0);
        for (int j = 0; j < cols; ++j) {
            const Integer& x = t[size_t(r)][size_t(m + j)];
            if (!x.fits_slong_p()) fail(Errc::invalid_params, "kernel entry overflows long");
            v[size_t(j)] = x.get_si();
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<Integer> inv;
    size_t top = 0;
    while (top < rows && top < cols) {
        // find a nonzero entry of minimal absolute value in the remaining block
        long br = -1, bc = -1;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 && (br < 0 || abs(m[i][j]) < abs(m[size_t(br)][size_t(bc)]))) {
                    br = long(i);
                    bc = long(j);
                }
        if (br < 0) break;
        std::swap(m[top], m[size_t(br)]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][size_t(bc)]);
        bool clean = true;
        for (size_t i = top + 1; i < rows; ++i) {
            if (m[i][top] == 0) continue;
            Integer f = m[i][top] / m[top][top];
            for (size_t j = top; j < cols; ++j) m[i][j] -= f * m[top][j];
            if (m[i][top] != 0) clean = false;
        }
        for (size_t j = top + 1; j < cols; ++j) {
            if (m[top][j] == 0) continue;
            Integer f = m[top][j] / m[top][top];
            for (size_t i = top; i < rows; ++i) m[i][j] -= f * m[i][top];
            if (m[top][j] != 0) clean = false;
        }
        if (!clean) continue;
        ++top;
    }
    for (size_t k = 0; k < top; ++k) inv.push_back(abs(m[k][k]));
    // enforce divisibility d_1 | d_2 | ...
    for (size_t i = 0; i + 1 < inv.size(); ++i)
        for (size_t j = i + 1; j < inv.size(); ++j) {
            Integer g = gcd(inv[i], inv[j]);
            Integer l = inv[i] / g * inv[j];
            inv[i] = g;
            inv[j] = l;
        }
    return inv;
}

} // namespace fd
