#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslat/core.hpp"
#include "reslat/filters.hpp"
#include "reslat/quotient.hpp"
#include "reslat/spectrum.hpp"

namespace reslat {

/// A point of the total space: the class `class_index` of the stalk over
/// prime `prime_index`.
struct StalkPoint {
    int prime_index = 0;
    int class_index = 0;

    friend bool operator==(const StalkPoint&, const StalkPoint&) = default;
};

/// One base open D(F, a) = { a_P : P in D(F) } of the total space.
struct TotalBaseOpen {
    int filter_index = 0;
    Element element = 0;
    Subset points;
};

/// The total space E_L = disjoint union of the stalks L/O(P), its base
/// topology, and the projection onto Spec(L).
struct SheafSpace {
    ResiduatedLattice lattice;
    std::vector<Filter> filters;
    std::vector<PrimeFilter> primes;
    FiniteTopology base_space;
    std::vector<QuotientAlgebra> stalks;
    std::vector<StalkPoint> points;
    std::vector<int> stalk_offset;
    std::vector<TotalBaseOpen> total_base;
    std::vector<Subset> total_base_sets;  // deduplicated, canonical order
    std::vector<Subset> total_opens;      // materialized only when small enough
    bool total_opens_complete = false;

    int point_count() const { return static_cast<int>(points.size()); }
    int prime_count() const { return static_cast<int>(primes.size()); }
    int point_index(int prime, int cls) const { return stalk_offset[prime] + cls; }
    int projection(int point) const { return points[point].prime_index; }

    Subset project(const Subset& pts) const;

    /// Exact openness test driven by the base: S is open iff every point of S
    /// has a base neighbourhood inside S. Independent of materialization.
    bool total_is_open(const Subset& s) const;

    /// S relatively open in the subspace u of the total space.
    bool total_relatively_open(const Subset& s, const Subset& u) const;

    /// S relatively open in the subspace u of Spec(L).
    bool stone_relatively_open(const Subset& s, const Subset& u) const;

    std::string point_label(int point) const;
};

/// Builds E_L: stalks L/O(P), the base {D(F,a)}, and (up to the cap) the full
/// open family. The base criterion and, when materialized, the topology
/// axioms are verified; failures throw InternalError. The cap bounds the
/// quadratic union-closure work; every check stays exact without it.
SheafSpace build_sheaf(const ResiduatedLattice& L, std::size_t max_total_opens = 4096);

/// Base criterion: the base covers E_L and pairwise intersections refine.
ValidationReport check_base_criterion(const SheafSpace& s);

/// Every fiber equals its stalk and the stalk algebras satisfy the axioms.
ValidationReport check_fibers(const SheafSpace& s);

/// Every point has a base neighbourhood that the projection maps
/// homeomorphically (bijectively, continuously, openly) onto an open set of
/// Spec(L).
ValidationReport check_local_homeomorphism(const SheafSpace& s);

/// For each of the four operations and every fibered pair, some base
/// neighbourhood of the pair maps into any given base neighbourhood of the
/// result.
ValidationReport check_operation_continuity(const SheafSpace& s);

/// The sections picking bottom (resp. top) classes everywhere are continuous.
ValidationReport check_zero_one_sections(const SheafSpace& s);

/// All checks above in a fixed order, labelled.
std::vector<std::pair<std::string, ValidationReport>> run_sheaf_checks(const SheafSpace& s);

/// A global section: one class per prime. The projection identity holds
/// structurally.
struct GlobalSection {
    std::vector<int> choice;

    friend bool operator==(const GlobalSection&, const GlobalSection&) = default;
};

/// The section a |-> a_P. Continuity is re-verified through the preimage
/// identity hat(a)^-1(D(F,b)) = D(F) n V(a->b) n V(b->a); a mismatch throws
/// InternalError.
GlobalSection hat(const SheafSpace& s, Element a);

bool section_continuous(const SheafSpace& s, const GlobalSection& sec);

/// All global sections (lexicographic in class indices) and their pointwise
/// residuated lattice.
struct SectionAlgebra {
    std::vector<GlobalSection> sections;
    ResiduatedLattice algebra;

    std::optional<int> index_of(const GlobalSection& s) const;
};

/// Enumerates every continuous choice function. Throws BudgetExceeded with
/// the exact candidate count when the raw product of stalk sizes is over
/// budget.
SectionAlgebra enumerate_sections(const SheafSpace& s, std::uint64_t budget);

/// sigma |-> sigma(P) preserves the four operations and the bounds.
ValidationReport stalk_projection_morphism(const SheafSpace& s, const SectionAlgebra& alg,
                                           int prime_index);

enum class Verdict { yes, no, unknown };

struct RepresentationReport {
    std::vector<GlobalSection> phi;  // indexed by element
    bool injective = false;
    Verdict surjective = Verdict::unknown;
    std::uint64_t section_product = 0;  // candidate count when unknown
    std::optional<std::size_t> gamma_size;
    std::size_t image_size = 0;
};

/// The representation a |-> hat(a). The morphism and injectivity checks must
/// hold (they are theorems) and throw InternalError otherwise; surjectivity
/// is decided by exhaustive section enumeration within the budget, else
/// reported unknown.
RepresentationReport represent(const SheafSpace& s, std::uint64_t budget = 1000000);
RepresentationReport represent(const ResiduatedLattice& L, std::uint64_t budget = 1000000);

/// Sections over an arbitrary subset of Spec(L), for exploration only.
struct PartialSection {
    Subset domain;            // over prime indices
    std::vector<int> choice;  // -1 outside the domain
};

std::vector<PartialSection> sections_over(const SheafSpace& s, const Subset& domain,
                                          std::uint64_t budget);

}  // namespace reslat
