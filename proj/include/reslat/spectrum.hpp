#pragma once

#include <utility>
#include <vector>

#include "reslat/core.hpp"
#include "reslat/filters.hpp"

namespace reslat {

/// A concrete finite topology: the deduplicated open family (canonical
/// (popcount, value) order) plus a distinguished base tagged by elements.
struct FiniteTopology {
    int point_count = 0;
    std::vector<Subset> opens;
    std::vector<std::pair<Element, Subset>> base;

    bool is_open(const Subset& s) const;
};

/// D(X) = set of primes not containing X, as a bit set over prime indices.
/// D of the empty set is empty.
Subset d_set(const ResiduatedLattice& L, const std::vector<PrimeFilter>& primes,
             const Subset& x);

/// The Stone topology on Spec(L): opens are { D(F) : F a filter }, the base is
/// { D(a) : a in L }. The topology axioms are re-verified before returning and
/// a failure throws InternalError (they are theorems).
FiniteTopology stone_topology(const ResiduatedLattice& L,
                              const std::vector<Filter>& filters,
                              const std::vector<PrimeFilter>& primes);

/// Checks empty/full membership, closure under pairwise intersection and
/// union, and that every open is a union of base members.
ValidationReport verify_topology(const FiniteTopology& t);

/// Same checks for an anonymous family over point sets (no element tags).
ValidationReport verify_open_family(const std::vector<Subset>& opens,
                                    const std::vector<Subset>& base, int point_count);

/// V(a) = primes whose separator filter O(P) contains a. Always a Stone open;
/// violation throws InternalError.
Subset v_set(const ResiduatedLattice& L, const std::vector<PrimeFilter>& primes,
             const FiniteTopology& topology, Element a);

}  // namespace reslat
