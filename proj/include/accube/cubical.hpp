#pragma once

// The Eilenberg-MacLane Q-construction for a finite abelian group A:
// A-cubes, the cubical differential, slab/diagonal normalization,
// differential matrices over normalized bases, and homology of Q_*(A).

#include "accube/abelian.hpp"

#include <compare>
#include <map>

namespace accube {

inline constexpr size_t kDefaultEnumCap = size_t(1) << 20;
inline constexpr size_t kDefaultDenseCap = size_t(1) << 23;

// An n-dimensional A-cube. Vertices are the binary words (e_1,...,e_n),
// word w stored at index sum e_i 2^(n-i) (first bit highest). Labels are
// element indices in the canonical element order of the group.
struct Cube {
    int dim = 0;
    std::vector<uint32_t> labels;
    auto operator<=>(const Cube&) const = default;
    bool operator==(const Cube&) const = default;
};

enum class Side { lower, upper };

Cube cube_from_elements(const FiniteAbelianGroup& a, const std::vector<GroupElem>& labels);
std::vector<GroupElem> cube_elements(const FiniteAbelianGroup& a, const Cube& x);

// Integer formal sum of same-dimension cubes; zero coefficients are
// never stored.
class Chain {
  public:
    Chain(FiniteAbelianGroup group, int dim) : group_(std::move(group)), dim_(dim) {}

    void add(const Cube& cube, const Int& coeff);
    const std::map<Cube, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int dim() const { return dim_; }
    const FiniteAbelianGroup& group() const { return group_; }

  private:
    FiniteAbelianGroup group_;
    int dim_;
    std::map<Cube, Int> terms_;
};

// Restriction to the i-th lower or upper face (1 <= i <= dim).
Cube face(const FiniteAbelianGroup& a, const Cube& x, int i, Side side);
// Vertexwise sum of the two i-faces.
Cube face_sum(const FiniteAbelianGroup& a, const Cube& x, int i);

// delta X = sum_i (-1)^i (S_i - U_i - L_i)(X), collected.
Chain differential(const FiniteAbelianGroup& a, const Cube& x);
Chain differential(const Chain& c);

// Slab: some face identically zero (dim 0: the label itself is zero).
bool is_slab(const FiniteAbelianGroup& a, const Cube& x);
// Diagonal (dim >= 2): for some i, every vertex whose word has
// e_i != e_{i+1} carries label zero.
bool is_diagonal(const FiniteAbelianGroup& a, const Cube& x);
bool is_degenerate(const FiniteAbelianGroup& a, const Cube& x);

// All non-degenerate n-cubes in canonical (lexicographic) order.
struct NormalizedBasis {
    FiniteAbelianGroup group;
    int dim = 0;
    std::vector<Cube> generators;
    std::map<Cube, size_t> position;

    size_t size() const { return generators.size(); }
    // index of a cube, or npos when the cube is degenerate
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t find(const Cube& x) const;
};

NormalizedBasis normalized_basis(const FiniteAbelianGroup& a, int n,
                                 size_t cap = kDefaultEnumCap);

// Memoized basis lookup (bases are immutable once built).
const NormalizedBasis& basis_cache(const FiniteAbelianGroup& a, int n,
                                   size_t cap = kDefaultEnumCap);

// Matrix of delta_n : Q_n -> Q_{n-1} over the normalized bases
// (rows: basis at n-1, columns: basis at n).
IntMatrix differential_matrix(const FiniteAbelianGroup& a, int n,
                              size_t cap = kDefaultEnumCap,
                              size_t dense_cap = kDefaultDenseCap);

// Column of delta_n for one generator, as (row, coefficient) pairs.
std::vector<std::pair<uint32_t, long>> differential_column(const FiniteAbelianGroup& a,
                                                           const NormalizedBasis& lower,
                                                           const Cube& gen);

// H_n(Q_*(A)) including a possible free part.
HomologyResult q_homology_full(const FiniteAbelianGroup& a, int n,
                               size_t cap = kDefaultEnumCap);
// H_n(Q_*(A)); throws if a free summand shows up.
FiniteAbelianGroup q_homology(const FiniteAbelianGroup& a, int n,
                              size_t cap = kDefaultEnumCap);

} // namespace accube
