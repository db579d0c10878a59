#pragma once

#include <vector>

#include "flagdescent/rational.hpp"

namespace fd {

// Split targets carrying the diagonal torus H_s whose character basis {e_i}
// everything is computed in.  The value encodes the bilinear-form shape, not
// just the Cartan type: SO_odd is the S_{2r+1} model, SO_even the S_{2r}
// model, SOprime_even the S'_{2r} model.
enum class SplitTarget { GL, SO_odd, Sp, SO_even, SOprime_even };

const char* split_target_name(SplitTarget t);
int ambient_size(SplitTarget t, int rank);

using IntVec = std::vector<long>;

struct Character {
    IntVec c;
    int rank() const { return int(c.size()); }
    bool operator==(const Character& o) const { return c == o.c; }
    bool operator!=(const Character& o) const { return c != o.c; }
    bool operator<(const Character& o) const { return c < o.c; }
    Character operator+(const Character& o) const;
    Character operator-() const;
};

struct Cocharacter {
    IntVec c;
    int rank() const { return int(c.size()); }
    bool operator==(const Cocharacter& o) const { return c == o.c; }
};

long pairing(const Cocharacter& mu, const Character& lam);

struct Root {
    Character root;
    Cocharacter coroot;
    bool operator==(const Root& o) const { return root == o.root && coroot == o.coroot; }
};

struct RootDatum {
    SplitTarget target;
    int rank = 0;
    std::vector<Root> roots; // closed under negation
};

// Full root list with coroots for the classical split groups; degenerate
// ranks (GL_1, SO_1, SO_2, SO'_2) give empty sets.
RootDatum build_root_datum(SplitTarget target, int rank);

// alpha > 0 iff the first basis element pairing nonzero with alpha pairs
// positively.  Throws degenerate-basis if some root pairs to zero with the
// whole basis.
std::vector<Root> lex_positive_system(const RootDatum& datum, const std::vector<Cocharacter>& ordered_basis);

// Indecomposable elements of a positive system, in a deterministic order.
// Throws not-a-positive-system if the input fails the closure check.
std::vector<Root> simple_system(const std::vector<Root>& positive);

// Integer basis of { lambda : <alpha^vee, lambda> = 0 for alpha in pi_prime }.
// The kernel of an integer matrix is saturated, so the basis is primitive.
std::vector<IntVec> parabolic_char_lattice(const std::vector<Root>& pi_prime, int rank);

// --- integer lattice utilities -------------------------------------------

// Basis of { x in Z^cols : rows * x = 0 }.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int cols);

// Invariant factors d_1 | d_2 | ... of an integer matrix (nonnegative).
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

} // namespace fd
