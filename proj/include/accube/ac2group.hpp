#pragma once

// Finite AC-category instances presented by tables: special AC-2-groups
// built from cubical 3-cocycles, exhaustive axiom verification,
// AC-functors and natural transformations, skeletalization to a
// classifying triple, and the equivalence decision procedure.

#include "accube/cohomology.hpp"

#include <memory>

namespace accube {

inline constexpr size_t kDefaultSweepCap = size_t(1) << 26;

struct Morphism {
    int src = 0;
    int dst = 0;
};

// Category-with-sum skeleton; everything is a total table over opaque
// object and morphism identifiers.
struct InstanceCore {
    int num_objects = 0;
    int unit_object = 0;
    std::vector<Morphism> mor;
    std::vector<int> identity;              // per object
    std::vector<std::vector<int>> compose_t; // compose_t[g][f] = g after f, -1 undefined
    std::vector<std::vector<int>> sum_obj;
    std::vector<std::vector<int>> sum_mor;

    int num_mor() const { return static_cast<int>(mor.size()); }
    int src(int f) const { return mor[f].src; }
    int dst(int f) const { return mor[f].dst; }
    int comp(int g, int f) const; // throws on non-composable
    int osum(int x, int y) const { return sum_obj[x][y]; }
    int msum(int f, int g) const { return sum_mor[f][g]; }
    std::vector<int> hom(int x, int y) const;
    // two-sided inverse, or -1
    int inverse(int f) const;
};

struct ACInstance {
    InstanceCore core;
    std::vector<int> b_table; // [x][y][z][t] flattened row-major
    std::vector<int> l_table, r_table;

    int b(int x, int y, int z, int t) const {
        int n = core.num_objects;
        return b_table[((size_t(x) * n + y) * n + z) * n + t];
    }
    int l(int x) const { return l_table[x]; }
    int r(int x) const { return r_table[x]; }
};

struct CheckLine {
    std::string axiom;
    bool pass = true;
    std::string where; // first violating tuple, empty when passing
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    bool ok() const;
    std::string to_text() const; // "PASS <axiom>" / "FAIL <axiom> at <tuple>"
};

// category / groupoid / sum-functor checks shared by the AC and SMC
// verifiers
void verify_core_structure(const InstanceCore& core, VerifyReport& report, size_t sweep_cap);

// The skeletal AC-2-group with objects G, automorphisms A, identity
// unitors and associo-commutator read from z. With check=false a
// non-cocycle table is accepted (the instance then fails verification).
ACInstance build_special(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                         const Cochain& z, bool check = true);

// Non-skeletal inflation of a special instance: copies[g] isomorphic
// copies of each object, structure transported copywise.
ACInstance inflate_special(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                           const Cochain& z, const std::vector<int>& copies);

// structural invariants + (acc1)-(acc3), exhaustively
VerifyReport verify_ac_axioms(const ACInstance& x, size_t sweep_cap = kDefaultSweepCap);
// symmetry, unit coherence, and the derived diagrams
VerifyReport verify_derived_coherence(const ACInstance& x, size_t sweep_cap = kDefaultSweepCap);

struct ACFunctorInstance {
    std::shared_ptr<const ACInstance> source, target;
    std::vector<int> object_map;
    std::vector<int> morphism_map;
    std::vector<std::vector<int>> f2; // [x][y], morphism of the target
    int f1 = 0;                       // morphism 1' -> F1 in the target
};

ACFunctorInstance identity_ac_functor(std::shared_ptr<const ACInstance> x);
// Prop-style comparison functor A(G,A,z) -> A(G,A,z+dc): identity on
// objects and morphisms, F2(x,y) = (c(x,y), x+y)
ACFunctorInstance cochain_twist_functor(std::shared_ptr<const ACInstance> source,
                                        std::shared_ptr<const ACInstance> target,
                                        const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                                        const Cochain& c);

VerifyReport verify_ac_functor(const ACFunctorInstance& f);
ACFunctorInstance compose_ac_functors(const ACFunctorInstance& g, const ACFunctorInstance& f);

struct ACNatTransInstance {
    ACFunctorInstance source, target; // parallel functors
    std::vector<int> components;      // per object of the common source
};

ACNatTransInstance identity_nat_trans(const ACFunctorInstance& f);
VerifyReport verify_ac_nat_trans(const ACNatTransInstance& t);
ACNatTransInstance vertical_compose(const ACNatTransInstance& second,
                                    const ACNatTransInstance& first);
ACNatTransInstance horizontal_compose(const ACNatTransInstance& outer,
                                      const ACNatTransInstance& inner);

struct ClassifyingTriple {
    FiniteAbelianGroup group; // pi_0
    FiniteAbelianGroup coeff; // pi_1
    Cochain cocycle;          // degree 3, base=group, coeff=coeff
};

ClassifyingTriple make_triple(const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
                              const Cochain& z);

// skeletalization choices: a representative object per isomorphism
// class and an isomorphism from each object to its representative
struct SkeletonChoices {
    std::vector<int> representative; // per object: the chosen x_[x]
    std::vector<int> iota;           // per object: morphism x -> representative
};

SkeletonChoices canonical_choices(const ACInstance& x);
SkeletonChoices seeded_choices(const ACInstance& x, uint64_t seed);

ClassifyingTriple skeletalize(const ACInstance& x, const SkeletonChoices& choices);
ClassifyingTriple skeletalize(const ACInstance& x);

struct EquivalenceWitness {
    GroupHom base_iso;  // g : G -> G'
    GroupHom coeff_iso; // f : A -> A'
    Cochain twist;      // 2-cochain c with g*(z') = f_*(z) + dc
};

// searches isomorphisms g, f and a coboundary witness; deterministic
std::optional<EquivalenceWitness> equivalent(const ClassifyingTriple& t1,
                                             const ClassifyingTriple& t2,
                                             size_t cap = kDefaultEnumCap);

// one triple per equivalence class of AC-2-groups with pi_0 = G,
// pi_1 = A: orbits of H^3 representatives under Aut(G) x Aut(A)
std::vector<ClassifyingTriple> classify_triples(const FiniteAbelianGroup& g,
                                                const FiniteAbelianGroup& a,
                                                size_t cap = kDefaultEnumCap);

} // namespace accube
