#pragma once

#include <vector>

#include "reslat/core.hpp"
#include "reslat/filters.hpp"

namespace reslat {

/// The quotient L/F by the congruence x ~ y iff (x -> y) (x) (y -> x) in F.
/// Classes are ordered by least member; the algebra's element names are the
/// brace-joined member names, e.g. "{0,b}".
struct QuotientAlgebra {
    ResiduatedLattice base;
    Filter filter;
    std::vector<Subset> classes;
    std::vector<int> class_of;
    ResiduatedLattice algebra;

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Builds L/F. Well-definedness of the representative-wise tables is a
/// theorem; it is re-checked on the concrete data and a failure throws
/// InternalError.
QuotientAlgebra quotient(const ResiduatedLattice& L, const Filter& f);

}  // namespace reslat
