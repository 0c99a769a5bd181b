#pragma once

// Finite symmetric-monoidal-category instances, the two conversion
// functors between AC data and (associator, commutator) data, the
// semistrict/commutator-family correspondence, and Sinh pairs.

#include "accube/ac2group.hpp"

namespace accube {

struct SMCInstance {
    InstanceCore core;
    std::vector<int> a_table; // [x][y][z]: morphism x(yz) -> (xy)z
    std::vector<int> c_table; // [x][y]:    morphism xy -> yx
    std::vector<int> l_table, r_table;

    int a(int x, int y, int z) const {
        int n = core.num_objects;
        return a_table[(size_t(x) * n + y) * n + z];
    }
    int cmt(int x, int y) const { return c_table[size_t(x) * core.num_objects + y]; }
    int l(int x) const { return l_table[x]; }
    int r(int x) const { return r_table[x]; }
};

// structural invariants plus pentagon / triangle / hexagon / symmetry
VerifyReport verify_smc_axioms(const SMCInstance& s, size_t sweep_cap = kDefaultSweepCap);

// skeletal symmetric monoidal instance over (G, A) with identity unitors,
// associator components h(x,y,z) and commutator components c(x,y)
SMCInstance build_skeletal_smc(
    const FiniteAbelianGroup& g, const FiniteAbelianGroup& a,
    const std::function<GroupElem(const GroupElem&, const GroupElem&, const GroupElem&)>& h,
    const std::function<GroupElem(const GroupElem&, const GroupElem&)>& c);

// associo-commutator assembled from the ten-step composite; both paths
// of the defining diagram are evaluated and must agree
ACInstance ac_from_smc(const SMCInstance& s, size_t sweep_cap = kDefaultSweepCap);
// associator and commutator extracted through the unit object
SMCInstance smc_from_ac(const ACInstance& x, size_t sweep_cap = kDefaultSweepCap);

// strict table equality of the round-tripped structure
bool roundtrip_check(const ACInstance& x, size_t sweep_cap = kDefaultSweepCap);
bool roundtrip_check(const SMCInstance& s, size_t sweep_cap = kDefaultSweepCap);

// unital, and b(x,y,z,t) = id whenever y or z is the unit
bool is_semistrict(const ACInstance& x);

// a symmetric-strict-monoidal presentation: strictly associative unital
// sum plus commutator components
struct CommutatorFamily {
    InstanceCore core;
    std::vector<int> c_table; // [x][y]
    int cmt(int x, int y) const { return c_table[size_t(x) * core.num_objects + y]; }
};

// extraction direction (verifies the derived conditions on b(1,x,y,1))
CommutatorFamily semistrict_commutator(const ACInstance& x);
// building direction (verifies the commutator-family conditions)
ACInstance build_from_commutator(const CommutatorFamily& fam);

// the three conditions satisfied by b(1,x,y,1) in a semistrict instance
VerifyReport verify_extracted_commutator(const ACInstance& x);
// the three conditions on a commutator family plus strictness of the sum
VerifyReport verify_commutator_family(const CommutatorFamily& fam);

// classical classifying data of a symmetric 2-group
struct SinhPair {
    FiniteAbelianGroup group, coeff;
    std::vector<GroupElem> h; // dense |G|^3, h[(x*n+y)*n+z]
    std::vector<GroupElem> c; // dense |G|^2

    const GroupElem& h_at(size_t x, size_t y, size_t z) const;
    const GroupElem& c_at(size_t x, size_t y) const;
};

// h(x,y,z) and c(x,y) read off the converted special instance; verifies
// h is a normalized trivial-action 3-cocycle, c is skew-symmetric, and
// the two compatibility relations hold; throws on any failure
SinhPair sinh_pair(const ClassifyingTriple& t);

} // namespace accube
