#pragma once

// Exact arithmetic for finite abelian groups and integer matrices:
// element algebra, homomorphisms, Smith normal form and linear solving
// over mixed moduli. Everything here is immutable after construction
// and safe to share across threads.

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace accube {

using Int = mpz_class;

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue vector of a group element; residues[i] lives in [0, m_i).
using GroupElem = std::vector<long>;

// A finite abelian group presented as a product of cyclic factors Z/m_i.
// The factor list is kept as given; canonical() returns the invariant
// factor form m_1 | m_2 | ... used for isomorphism tests.
class FiniteAbelianGroup {
  public:
    FiniteAbelianGroup() = default; // trivial group
    explicit FiniteAbelianGroup(std::vector<long> moduli);

    size_t rank() const { return moduli_.size(); }
    // by value: the vector is tiny and this keeps expressions like
    // canonical().moduli() safe in range-for loops
    std::vector<long> moduli() const { return moduli_; }
    Int order() const;
    // order() as a size_t, for element enumeration; throws CapExceededError
    // if the order does not fit.
    size_t order_index() const;
    long exponent() const;

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

    FiniteAbelianGroup canonical() const;
    bool isomorphic_to(const FiniteAbelianGroup& o) const;

    // Group literal grammar: `Z<n>` factors joined by `x`; `1` is trivial.
    std::string to_string() const;
    static FiniteAbelianGroup parse(const std::string& text);

    GroupElem zero() const { return GroupElem(moduli_.size(), 0); }
    bool is_zero(const GroupElem& a) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem neg(const GroupElem& a) const;
    GroupElem sub(const GroupElem& a, const GroupElem& b) const;
    GroupElem scalar_mul(long k, const GroupElem& a) const;
    GroupElem reduce(const std::vector<Int>& v) const;
    long element_order(const GroupElem& a) const;

    // Canonical element order is lexicographic on residue vectors;
    // element_at/index_of realize that order.
    size_t index_of(const GroupElem& a) const;
    GroupElem element_at(size_t idx) const;

    void check_element(const GroupElem& a) const;

  private:
    std::vector<long> moduli_;
};

// Dense matrix of exact integers.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(size_t n);
    static IntMatrix zero(size_t rows, size_t cols) { return IntMatrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool is_zero() const;
    IntMatrix transposed() const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);

    std::string to_string() const;

  private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

// D = U * M * V with U, V unimodular, D diagonal, d_1 | d_2 | ...,
// nonzero diagonal entries positive.
struct SnfResult {
    IntMatrix u, d, v;
    std::vector<Int> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Exact determinant (fraction-free Gaussian elimination).
Int determinant(const IntMatrix& m);

// Basis of { x in Z^cols : M x = 0 }, as columns of the result.
IntMatrix integer_kernel(const IntMatrix& m);

// Some integer solution of M x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

// Same, but reusing one Smith decomposition across right-hand sides.
class IntegerSolver {
  public:
    explicit IntegerSolver(const IntMatrix& m);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

  private:
    size_t rows_, cols_;
    SnfResult snf_;
};

// ker(d_out) / im(d_in) as free rank plus torsion part.
// Requires d_out * d_in = 0.
struct HomologyResult {
    size_t free_rank = 0;
    FiniteAbelianGroup torsion;
    bool is_finite() const { return free_rank == 0; }
    std::string to_string() const;
};

HomologyResult homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in);

// Hom(G, B) = prod_{i,j} Z/gcd(m_i, n_j), in canonical form.
FiniteAbelianGroup hom_group(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b);

// Least solution (lexicographically, coordinates in [0, lcm moduli)) of
// M x = b componentwise modulo target_moduli[row], or nullopt.
std::optional<std::vector<long>> solve_affine(const IntMatrix& m,
                                              const std::vector<long>& target_moduli,
                                              const std::vector<long>& b);

// Linear algebra over Z/q. Subgroups of (Z/q)^n are handled through a
// Howell-style echelon of generator rows, which also gives canonical
// coset representatives.
std::vector<std::vector<long>> howell_form(std::vector<std::vector<long>> rows, long q);
std::vector<long> lex_min_coset(std::vector<long> x0, const std::vector<std::vector<long>>& gens,
                                long q);
// Generators of { x in (Z/q)^n : R x = 0 mod q } for an integer matrix R
// (only the row lattice of R matters).
std::vector<std::vector<long>> kernel_mod_q(const IntMatrix& rowBasis, long q);
Int subgroup_order_mod_q(const std::vector<std::vector<long>>& rows, long q);
// All elements of the subgroup of (Z/q)^n generated by gens; throws
// CapExceededError beyond `cap`.
std::vector<std::vector<long>> enumerate_subgroup_mod_q(const std::vector<std::vector<long>>& gens,
                                                        long q, size_t n, size_t cap);
// K / I for subgroups I <= K <= (Z/q)^n given by generator rows,
// as a canonical finite abelian group.
FiniteAbelianGroup quotient_group_mod_q(const std::vector<std::vector<long>>& k_gens,
                                        const std::vector<std::vector<long>>& i_gens, long q,
                                        size_t n);

// Incrementally intersects (Z/q)^n with the kernels of a stream of
// linear constraints. Constraints already satisfied by the current
// solution subgroup cost almost nothing, which makes large redundant
// systems (differential constraint sweeps) cheap.
class ModKernelAccumulator {
  public:
    ModKernelAccumulator(size_t n, long q);
    void add_constraint(const std::vector<std::pair<uint32_t, long>>& row);
    // generator rows of the accumulated solution subgroup
    const std::vector<std::vector<long>>& generators() const { return gens_; }

  private:
    size_t n_;
    long q_;
    std::vector<std::vector<long>> gens_;
};

// A group homomorphism G -> H given by an integer matrix acting on
// residue vectors (columns indexed by source factors).
class GroupHom {
  public:
    GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, IntMatrix matrix);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElem apply(const GroupElem& a) const;
    bool is_bijective() const;

  private:
    FiniteAbelianGroup source_, target_;
    IntMatrix matrix_;
};

// All isomorphisms G -> H in a fixed deterministic order (lexicographic
// on the images of the canonical generators). Empty when |G| != |H| or
// the groups are not isomorphic. Intended for small groups.
std::vector<GroupHom> enumerate_isomorphisms(const FiniteAbelianGroup& g,
                                             const FiniteAbelianGroup& h);

// Brute-force count of homomorphisms G -> B (test oracle).
size_t count_homomorphisms_bruteforce(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b);

// Accumulates integer row vectors and maintains a row-echelon basis of
// the lattice they span. Used to compress huge differential systems to
// their row lattice before SNF. Arithmetic runs on checked 64-bit
// integers and promotes itself to GMP on the first overflow.
class RowLattice {
  public:
    explicit RowLattice(size_t ncols);
    void add_row(const std::vector<Int>& row);
    void add_sparse_row(const std::vector<std::pair<uint32_t, long>>& entries);
    // rows() x ncols matrix whose rows span the accumulated lattice
    IntMatrix basis() const;
    size_t ncols() const { return ncols_; }

  private:
    size_t ncols_;
    bool wide_ = false;
    std::vector<std::vector<long>> nrows_; // echelon rows, narrow mode
    std::vector<std::vector<Int>> wrows_;  // echelon rows, wide mode
    std::vector<size_t> pivots_;           // pivot column per row
    void promote();
    bool add_row_narrow(std::vector<long>& v); // false: overflow, v exact
    void add_row_wide(std::vector<Int> v);
    void reduce_above_wide();
};

// Finite abelian group presented by a multiplication table; produces the
// canonical form together with an explicit isomorphism. `table[i][j]` is
// the index of the sum, `zero` the neutral element's index. The chosen
// isomorphism is deterministic: generators are picked backwards (last
// invariant factor first), each the least admissible element index.
struct TableGroupIso {
    FiniteAbelianGroup group;                 // canonical form
    std::vector<GroupElem> to_canonical;      // element index -> canonical elem
    std::vector<size_t> from_canonical;       // canonical elem index -> element index
};

TableGroupIso canonicalize_group_table(const std::vector<std::vector<size_t>>& table, size_t zero);

} // namespace accube
