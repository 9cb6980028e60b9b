#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reslat/subset.hpp"

namespace reslat {

/// Elements are plain indices into the carrier; names are presentation-only.
using Element = int;

/// Square operation table over element indices; row index = left operand.
class OpTable {
public:
    OpTable() = default;
    explicit OpTable(int n, Element fill = 0)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }

    Element operator()(Element x, Element y) const { return cells_[index(x, y)]; }
    Element& at(Element x, Element y) { return cells_[index(x, y)]; }

    friend bool operator==(const OpTable&, const OpTable&) = default;

private:
    std::size_t index(Element x, Element y) const {
        return static_cast<std::size_t>(x) * n_ + y;
    }

    int n_ = 0;
    std::vector<Element> cells_;
};

/// Raw input for a lattice: names plus tables, residuum optional.
struct RawTables {
    std::vector<std::string> names;
    OpTable meet;
    OpTable join;
    OpTable tensor;
    std::optional<OpTable> residuum;

    int size() const { return static_cast<int>(names.size()); }
};

struct Violation {
    std::string axiom;
    std::vector<Element> witness;
    std::string detail;  // optional human-readable context
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;

    void fail(std::string axiom, std::vector<Element> witness, std::string detail = {}) {
        passed = false;
        violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }
};

/// Tables have wrong dimensions or out-of-range entries.
struct MalformedTables : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The tensor has no residuum (the adjoint candidate fails the adjunction).
struct NotResiduated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tables violate the axioms; carries the full report.
struct ValidationFailed : std::runtime_error {
    explicit ValidationFailed(ValidationReport r)
        : std::runtime_error(r.violations.empty()
                                 ? "validation failed"
                                 : "validation failed: " + r.violations.front().axiom),
          report(std::move(r)) {}
    ValidationReport report;
};

/// A verified theorem failed on concrete data: always a bug, never user error.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration space exceeds the configured budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t p)
        : std::runtime_error("candidate count " + std::to_string(p) + " exceeds budget"),
          product(p) {}
    std::uint64_t product;
};

/// Validates the tables against the residuated-lattice axioms. Structural
/// problems (dimensions, entry ranges) throw MalformedTables; axiom failures
/// land in the report, each with the lexicographically least witness tuple.
/// The adjunction is checked only when a residuum table is present.
ValidationReport validate(const RawTables& t);

/// Computes the residuum as the adjoint of the tensor:
/// residuum(y, z) = join{ w : w (x) y <= z }, then re-verifies the full
/// adjunction. Throws NotResiduated if no adjoint exists. Expects the lattice
/// and monoid axioms to already hold.
OpTable derive_residuum(const RawTables& t);

/// A finite residuated lattice. Immutable; aside from the empty placeholder
/// state, only constructible from tables that pass validation.
class ResiduatedLattice {
public:
    ResiduatedLattice() = default;

    /// Derives the residuum when absent, then validates; throws
    /// MalformedTables / NotResiduated / ValidationFailed. allow_trivial
    /// admits the degenerate one-element algebra, which only quotients by the
    /// total filter produce; it is rejected everywhere else.
    static ResiduatedLattice from_tables(RawTables t, bool allow_trivial = false);

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element x) const { return names_[x]; }

    Element meet(Element x, Element y) const { return meet_(x, y); }
    Element join(Element x, Element y) const { return join_(x, y); }
    Element tensor(Element x, Element y) const { return tensor_(x, y); }
    Element residuum(Element x, Element y) const { return residuum_(x, y); }

    bool leq(Element x, Element y) const { return meet_(x, y) == x; }

    Element bottom() const { return bottom_; }
    Element top() const { return top_; }

    const OpTable& meet_table() const { return meet_; }
    const OpTable& join_table() const { return join_; }
    const OpTable& tensor_table() const { return tensor_; }
    const OpTable& residuum_table() const { return residuum_; }

    /// True when all four tables coincide (names ignored).
    bool same_tables(const ResiduatedLattice& o) const {
        return meet_ == o.meet_ && join_ == o.join_ && tensor_ == o.tensor_ &&
               residuum_ == o.residuum_;
    }

    Subset carrier() const { return Subset::full(n_); }

private:
    int n_ = 0;
    std::vector<std::string> names_;
    OpTable meet_, join_, tensor_, residuum_;
    Element bottom_ = 0, top_ = 0;
};

/// Order induced by the meet table; usable on raw tables before validation.
inline bool table_leq(const OpTable& meet, Element x, Element y) {
    return meet(x, y) == x;
}

}  // namespace reslat
