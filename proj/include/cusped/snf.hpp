#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusped/common.hpp"

namespace cusped {

// Dense matrix over Z (exact).
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IMat identity(int n);
    IMat mul(const IMat& other) const;
    IMat transpose() const;
    bool is_zero() const;
    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

std::vector<Int> mat_vec(const IMat& m, const std::vector<Int>& x);

// S = U * A * V with U, V unimodular, S diagonal with a divisibility chain.
struct SmithForm {
    IMat S, U, V;
    IMat Uinv, Vinv;
    int rank = 0;
    std::vector<Int> divisors;  // nonzero diagonal entries, d1 | d2 | ...
};

SmithForm smith_normal_form(const IMat& A);

// Determinant via fraction-free elimination (used to verify unimodularity).
Int determinant(const IMat& A);

// One integer solution of A x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IMat& A, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_linear(const SmithForm& snf, const std::vector<Int>& b);

// Basis of the integer kernel lattice of A (columns).
IMat kernel_basis(const IMat& A);

// Finitely generated abelian group: Z^rank + sum Z/d_i with d_1 | d_2 | ...
struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    std::string str() const;  // "rank; d1,d2,..."
};

// H = ker B / im A presented on explicit generators, with a coordinate map
// for arbitrary elements of ker B.  Pass an empty B (rows == -1 sentinel via
// no_outgoing) when the kernel is everything.
class SubquotientGroup {
public:
    // B: n -> m (outgoing differential), A: p -> n (incoming).  Either may be
    // a 0xN / Nx0 matrix.
    SubquotientGroup(const IMat& B, const IMat& A, int n);

    const AbelianGroup& group() const { return group_; }
    int num_coords() const { return group_.rank + static_cast<int>(group_.torsion.size()); }

    // Coordinates of x (must lie in ker B): torsion coords first (mod d_i),
    // then free coords.
    std::vector<Int> coords(const std::vector<Int>& x) const;

    // Representative cocycle/cycle for each coordinate generator.
    std::vector<Int> generator(int i) const;

    // Relation moduli per coordinate (d_i for torsion coords, 0 for free).
    std::vector<Int> coord_moduli() const;

private:
    int n_;
    AbelianGroup group_;
    IMat K_;           // kernel basis of B (n x k)
    SmithForm KW_;     // SNF of W where K W = A
    std::vector<int> coord_idx_;  // which z-coordinates are reported
};

// Matrix of the map induced on subquotients by the identity on ambient
// coordinates (target.coords applied to source generators).
IMat induced_matrix(const SubquotientGroup& source, const SubquotientGroup& target);

// Exactness of A --f--> B --g--> C at B: im f == ker g as subgroups of B,
// where B's coordinates carry moduli modB (0 = free), f and g are coordinate
// matrices, and modC are C's moduli.
bool exact_at(const IMat& f, const std::vector<Int>& modB, const IMat& g,
              const std::vector<Int>& modC);

}  // namespace cusped
