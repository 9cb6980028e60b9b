#pragma once

#include <vector>

#include "reslat/core.hpp"

namespace reslat {

/// A filter: nonempty, upward closed, closed under the tensor.
struct Filter {
    Subset elements;

    bool contains(Element x) const { return elements.test(x); }
    friend bool operator==(const Filter&, const Filter&) = default;
};

/// A prime filter together with its position in the canonical spectrum order.
struct PrimeFilter {
    Filter filter;
    int index = 0;

    bool contains(Element x) const { return filter.contains(x); }
};

bool is_filter(const ResiduatedLattice& L, const Subset& s);

/// Modus-ponens characterization: 1 in S, and x in S with x -> y in S force
/// y in S. Equivalent to is_filter on nonempty upward-closed sets, which is
/// the caller's precondition.
bool is_filter_alt(const ResiduatedLattice& L, const Subset& s);

bool is_upward_closed(const ResiduatedLattice& L, const Subset& s);

/// Least filter containing X: tensor-closure first, then upward closure.
/// The empty set generates {1}.
Filter generated_filter(const ResiduatedLattice& L, const Subset& x);

/// Every filter, ordered by (cardinality, bit-mask value) ascending.
std::vector<Filter> all_filters(const ResiduatedLattice& L);

bool is_prime(const ResiduatedLattice& L, const Filter& f);

/// All prime filters in the canonical filter order, indices by position.
std::vector<PrimeFilter> prime_spectrum(const ResiduatedLattice& L);

/// O(P) = { x : a v x = 1 for some a outside P }. Always a proper filter
/// contained in P; an internal consistency check enforces that.
Filter o_of_p(const ResiduatedLattice& L, const PrimeFilter& p);

/// First prime (in spectrum order) containing f and omitting a.
/// Pre: a is not in f; existence is then guaranteed.
PrimeFilter separate_with_prime(const ResiduatedLattice& L, const Filter& f, Element a);

}  // namespace reslat
