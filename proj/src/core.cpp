#include "reslat/core.hpp"

#include <algorithm>

namespace reslat {

namespace {

void check_shape(const OpTable& t, int n, const char* which) {
    if (t.size() != n)
        throw MalformedTables(std::string(which) + " table is not " + std::to_string(n) +
                              "x" + std::to_string(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (t(x, y) < 0 || t(x, y) >= n)
                throw MalformedTables(std::string(which) + " entry out of range at (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
}

// Least element under the meet-induced order, or -1.
Element find_bottom(const OpTable& meet, int n) {
    for (Element x = 0; x < n; ++x) {
        bool least = true;
        for (Element y = 0; y < n && least; ++y) least = table_leq(meet, x, y);
        if (least) return x;
    }
    return -1;
}

Element find_top(const OpTable& meet, int n) {
    for (Element x = 0; x < n; ++x) {
        bool greatest = true;
        for (Element y = 0; y < n && greatest; ++y) greatest = table_leq(meet, y, x);
        if (greatest) return x;
    }
    return -1;
}

// Records the lexicographically least witness of a unary/binary/ternary law,
// scanning in index order and stopping at the first hit.
template <typename Pred>
void check_law1(ValidationReport& r, int n, const std::string& axiom, Pred holds) {
    for (Element x = 0; x < n; ++x)
        if (!holds(x)) {
            r.fail(axiom, {x});
            return;
        }
}

template <typename Pred>
void check_law2(ValidationReport& r, int n, const std::string& axiom, Pred holds) {
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (!holds(x, y)) {
                r.fail(axiom, {x, y});
                return;
            }
}

template <typename Pred>
void check_law3(ValidationReport& r, int n, const std::string& axiom, Pred holds) {
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (!holds(x, y, z)) {
                    r.fail(axiom, {x, y, z});
                    return;
                }
}

}  // namespace

ValidationReport validate(const RawTables& t) {
    const int n = t.size();
    if (n == 0) throw MalformedTables("empty carrier");
    check_shape(t.meet, n, "meet");
    check_shape(t.join, n, "join");
    check_shape(t.tensor, n, "tensor");
    if (t.residuum) check_shape(*t.residuum, n, "residuum");

    ValidationReport r;
    if (n < 2) r.fail("carrier size", {}, "need at least two elements (0 != 1)");

    const OpTable& meet = t.meet;
    const OpTable& join = t.join;
    const OpTable& tensor = t.tensor;

    check_law1(r, n, "meet idempotence", [&](Element x) { return meet(x, x) == x; });
    check_law2(r, n, "meet commutativity",
               [&](Element x, Element y) { return meet(x, y) == meet(y, x); });
    check_law3(r, n, "meet associativity", [&](Element x, Element y, Element z) {
        return meet(meet(x, y), z) == meet(x, meet(y, z));
    });
    check_law1(r, n, "join idempotence", [&](Element x) { return join(x, x) == x; });
    check_law2(r, n, "join commutativity",
               [&](Element x, Element y) { return join(x, y) == join(y, x); });
    check_law3(r, n, "join associativity", [&](Element x, Element y, Element z) {
        return join(join(x, y), z) == join(x, join(y, z));
    });
    check_law2(r, n, "absorption meet-join",
               [&](Element x, Element y) { return meet(x, join(x, y)) == x; });
    check_law2(r, n, "absorption join-meet",
               [&](Element x, Element y) { return join(x, meet(x, y)) == x; });

    const Element bottom = find_bottom(meet, n);
    const Element top = find_top(meet, n);
    if (bottom < 0) r.fail("bounds", {}, "no least element under the meet order");
    if (top < 0) r.fail("bounds", {}, "no greatest element under the meet order");
    if (bottom >= 0 && top >= 0 && bottom == top)
        r.fail("carrier size", {bottom}, "bottom equals top");

    if (top >= 0)
        check_law1(r, n, "monoid identity",
                   [&](Element x) { return tensor(x, top) == x; });
    check_law2(r, n, "monoid commutativity",
               [&](Element x, Element y) { return tensor(x, y) == tensor(y, x); });
    check_law3(r, n, "monoid associativity", [&](Element x, Element y, Element z) {
        return tensor(tensor(x, y), z) == tensor(x, tensor(y, z));
    });

    if (t.residuum) {
        const OpTable& res = *t.residuum;
        check_law3(r, n, "residuation adjunction", [&](Element x, Element y, Element z) {
            return table_leq(meet, tensor(x, y), z) == table_leq(meet, x, res(y, z));
        });
    }
    return r;
}

OpTable derive_residuum(const RawTables& t) {
    const int n = t.size();
    check_shape(t.meet, n, "meet");
    check_shape(t.join, n, "join");
    check_shape(t.tensor, n, "tensor");

    OpTable res(n);
    for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
            Element acc = -1;
            for (Element w = 0; w < n; ++w)
                if (table_leq(t.meet, t.tensor(w, y), z))
                    acc = acc < 0 ? w : t.join(acc, w);
            if (acc < 0)
                throw NotResiduated("no candidate for residuum(" + std::to_string(y) + "," +
                                    std::to_string(z) + ")");
            // The join of all candidates must itself be a candidate.
            if (!table_leq(t.meet, t.tensor(acc, y), z))
                throw NotResiduated("candidate join " + std::to_string(acc) +
                                    " fails w (x) " + std::to_string(y) + " <= " +
                                    std::to_string(z));
            res.at(y, z) = acc;
        }

    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (table_leq(t.meet, t.tensor(x, y), z) != table_leq(t.meet, x, res(y, z)))
                    throw NotResiduated("derived table violates the adjunction at (" +
                                        std::to_string(x) + "," + std::to_string(y) + "," +
                                        std::to_string(z) + ")");
    return res;
}

ResiduatedLattice ResiduatedLattice::from_tables(RawTables t, bool allow_trivial) {
    if (!t.residuum) t.residuum = derive_residuum(t);
    ValidationReport report = validate(t);
    if (allow_trivial) {
        std::erase_if(report.violations,
                      [](const Violation& v) { return v.axiom == "carrier size"; });
        report.passed = report.violations.empty();
    }
    if (!report.passed) throw ValidationFailed(std::move(report));

    ResiduatedLattice lat;
    lat.n_ = t.size();
    lat.names_ = std::move(t.names);
    lat.meet_ = std::move(t.meet);
    lat.join_ = std::move(t.join);
    lat.tensor_ = std::move(t.tensor);
    lat.residuum_ = std::move(*t.residuum);
    lat.bottom_ = find_bottom(lat.meet_, lat.n_);
    lat.top_ = find_top(lat.meet_, lat.n_);
    return lat;
}

}  // namespace reslat
