#pragma once

// Cubical cochain complex C^*(G,B) = Hom(Q_{*-1}(G), B): coboundary,
// 3-cocycle and 3-coboundary predicates, cohomology groups (matrix/SNF
// route plus an independent enumeration oracle), and deterministic
// enumeration of degree-3 representatives.

#include "accube/cubical.hpp"

#include <functional>
#include <optional>

namespace accube {

// A degree-(n+1) cochain stores its values on the normalized basis of
// Q_n(base); it is implicitly zero on slabs and diagonals.
struct Cochain {
    FiniteAbelianGroup base, coeff;
    int degree = 1;
    std::vector<GroupElem> values;

    bool is_zero() const;
    // lexicographic key on the concatenated value residues
    std::vector<long> lex_key() const;
    bool operator==(const Cochain& o) const;
};

Cochain zero_cochain(const FiniteAbelianGroup& base, const FiniteAbelianGroup& coeff, int degree,
                     size_t cap = kDefaultEnumCap);

// value on an arbitrary cube (zero on degenerate ones) / on a chain
GroupElem cochain_value(const Cochain& f, const Cube& x);
GroupElem cochain_value(const Cochain& f, const Chain& c);

Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);

// (df)(X) = f(delta X)
Cochain coboundary(const Cochain& f, size_t cap = kDefaultEnumCap);

// degree-3 cochains as maps z : G^4 -> B (arguments (x,y,z,t) are the
// vertex labels (a00,a01,a10,a11) of a 2-cube)
Cochain cochain_from_function3(
    const FiniteAbelianGroup& base, const FiniteAbelianGroup& coeff,
    const std::function<GroupElem(const GroupElem&, const GroupElem&, const GroupElem&,
                                  const GroupElem&)>& fn,
    size_t cap = kDefaultEnumCap);

// dense |G|^4 value table (entries are element indices in coeff)
struct DenseTable3 {
    FiniteAbelianGroup base, coeff;
    std::vector<uint32_t> vals;
    size_t n = 0; // |G|
    uint32_t at(size_t x, size_t y, size_t z, size_t t) const {
        return vals[((x * n + y) * n + z) * n + t];
    }
};
DenseTable3 dense_table3(const Cochain& z);
Cochain cochain_from_dense3(const DenseTable3& table);

struct CocycleViolation {
    std::string condition; // "normalization" or "cocycle"
    std::vector<GroupElem> tuple;
};
struct CocycleReport {
    bool ok = true;
    std::optional<CocycleViolation> violation;
};

// Eq. of the 16-term degree-3 cocycle condition over all of G^8 plus the
// five normalization families; reports the canonically first violation.
CocycleReport is_cocycle3(const Cochain& z, size_t cap = kDefaultEnumCap);

// z(x,y,z,t) + z(x,z,y,t) = 0 for all tuples
bool check_middle_antisymmetry(const Cochain& z);

// normalized degree-2 witness with dc = z (deterministic least), if any
std::optional<Cochain> coboundary_witness(const Cochain& z, size_t cap = kDefaultEnumCap);

// H^n(G,B) through differential matrices + coefficient moduli (SNF route)
FiniteAbelianGroup cohomology_group(const FiniteAbelianGroup& g, const FiniteAbelianGroup& b,
                                    int n, size_t cap = kDefaultEnumCap);

// Independent oracle: full value-table enumeration when |B|^k fits the
// cap, otherwise per-prime Gaussian elimination; nullopt if neither is
// feasible.
std::optional<FiniteAbelianGroup> cohomology_group_enum(const FiniteAbelianGroup& g,
                                                        const FiniteAbelianGroup& b, int n,
                                                        size_t cap = kDefaultEnumCap);

// Exactly one representative per class of H^3(G,B), each the
// lexicographically least member of its class, listed in ascending order.
std::vector<Cochain> cocycle_representatives3(const FiniteAbelianGroup& g,
                                              const FiniteAbelianGroup& b,
                                              size_t cap = kDefaultEnumCap);

// pushforward along f : B -> B' (values) and pullback along g : G -> G'
// (arguments); both send cocycles to cocycles
Cochain pushforward(const GroupHom& f, const Cochain& z);
Cochain pullback(const GroupHom& g, const Cochain& z_on_target, size_t cap = kDefaultEnumCap);

} // namespace accube
