#include "reslat/spectrum.hpp"

#include <algorithm>
#include <unordered_set>

namespace reslat {

bool FiniteTopology::is_open(const Subset& s) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), s, Subset::canonical_less);
    return it != opens.end() && *it == s;
}

Subset d_set(const ResiduatedLattice& L, const std::vector<PrimeFilter>& primes,
             const Subset& x) {
    (void)L;
    Subset d(static_cast<int>(primes.size()));
    for (const PrimeFilter& p : primes)
        if (!x.subset_of(p.filter.elements)) d.set(p.index);
    return d;
}

FiniteTopology stone_topology(const ResiduatedLattice& L,
                              const std::vector<Filter>& filters,
                              const std::vector<PrimeFilter>& primes) {
    FiniteTopology t;
    t.point_count = static_cast<int>(primes.size());

    std::unordered_set<Subset, Subset::Hash> seen;
    for (const Filter& f : filters) {
        Subset d = d_set(L, primes, f.elements);
        if (seen.insert(d).second) t.opens.push_back(d);
    }
    std::sort(t.opens.begin(), t.opens.end(), Subset::canonical_less);

    for (Element a = 0; a < L.size(); ++a)
        t.base.emplace_back(a, d_set(L, primes, Subset::single(L.size(), a)));

    ValidationReport report = verify_topology(t);
    if (!report.passed)
        throw InternalError("stone topology axioms: " + report.violations.front().axiom);
    return t;
}

ValidationReport verify_topology(const FiniteTopology& t) {
    std::vector<Subset> base;
    base.reserve(t.base.size());
    for (const auto& [a, d] : t.base) base.push_back(d);
    return verify_open_family(t.opens, base, t.point_count);
}

ValidationReport verify_open_family(const std::vector<Subset>& opens,
                                    const std::vector<Subset>& base, int point_count) {
    ValidationReport r;
    std::unordered_set<Subset, Subset::Hash> family(opens.begin(), opens.end());
    auto open = [&](const Subset& s) { return family.count(s) > 0; };

    if (!open(Subset(point_count))) r.fail("empty set absent", {});
    if (!open(Subset::full(point_count))) r.fail("full set absent", {});

    const int k = static_cast<int>(opens.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!open(opens[i] & opens[j])) {
                r.fail("intersection closure", {i, j});
                goto unions;
            }
unions:
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!open(opens[i] | opens[j])) {
                r.fail("union closure", {i, j});
                goto base_open;
            }
base_open:
    for (int i = 0; i < static_cast<int>(base.size()); ++i)
        if (!open(base[i])) {
            r.fail("base member not open", {i});
            break;
        }
    // Every open must be the union of the base members below it.
    for (int i = 0; i < k; ++i) {
        Subset u(point_count);
        for (const Subset& b : base)
            if (b.subset_of(opens[i])) u = u | b;
        if (u != opens[i]) {
            r.fail("open not a union of base members", {i});
            break;
        }
    }
    return r;
}

Subset v_set(const ResiduatedLattice& L, const std::vector<PrimeFilter>& primes,
             const FiniteTopology& topology, Element a) {
    Subset v(static_cast<int>(primes.size()));
    for (const PrimeFilter& p : primes)
        if (o_of_p(L, p).contains(a)) v.set(p.index);
    if (!topology.is_open(v))
        throw InternalError("separator set V(" + L.name(a) + ") is not a Stone open");
    return v;
}

}  // namespace reslat
