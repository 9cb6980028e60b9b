#include "reslat/filters.hpp"

#include <algorithm>
#include <unordered_set>

namespace reslat {

bool is_upward_closed(const ResiduatedLattice& L, const Subset& s) {
    for (Element x = 0; x < L.size(); ++x) {
        if (!s.test(x)) continue;
        for (Element y = 0; y < L.size(); ++y)
            if (L.leq(x, y) && !s.test(y)) return false;
    }
    return true;
}

bool is_filter(const ResiduatedLattice& L, const Subset& s) {
    if (s.empty()) return false;
    if (!is_upward_closed(L, s)) return false;
    for (Element x = 0; x < L.size(); ++x) {
        if (!s.test(x)) continue;
        for (Element y = x; y < L.size(); ++y)
            if (s.test(y) && !s.test(L.tensor(x, y))) return false;
    }
    return true;
}

bool is_filter_alt(const ResiduatedLattice& L, const Subset& s) {
    if (!s.test(L.top())) return false;
    for (Element x = 0; x < L.size(); ++x) {
        if (!s.test(x)) continue;
        for (Element y = 0; y < L.size(); ++y)
            if (s.test(L.residuum(x, y)) && !s.test(y)) return false;
    }
    return true;
}

Filter generated_filter(const ResiduatedLattice& L, const Subset& x) {
    // Tensor closure; the empty product contributes the top.
    Subset closed(L.size());
    closed.set(L.top());
    closed = closed | x;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Element a = 0; a < L.size(); ++a) {
            if (!closed.test(a)) continue;
            for (Element b = a; b < L.size(); ++b) {
                if (!closed.test(b)) continue;
                Element c = L.tensor(a, b);
                if (!closed.test(c)) {
                    closed.set(c);
                    grew = true;
                }
            }
        }
    }
    // Upward closure.
    Subset up(L.size());
    for (Element a = 0; a < L.size(); ++a) {
        if (!closed.test(a)) continue;
        for (Element y = 0; y < L.size(); ++y)
            if (L.leq(a, y)) up.set(y);
    }
    return Filter{up};
}

std::vector<Filter> all_filters(const ResiduatedLattice& L) {
    // Breadth-first closure: principal filters, then close the family under
    // pairwise intersection and join (generated filter of the union).
    std::unordered_set<Subset, Subset::Hash> family;
    std::vector<Subset> work;
    auto add = [&](const Subset& s) {
        if (family.insert(s).second) work.push_back(s);
    };
    add(generated_filter(L, Subset(L.size())).elements);
    for (Element a = 0; a < L.size(); ++a)
        add(generated_filter(L, Subset::single(L.size(), a)).elements);

    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(work[i] & work[j]);
            add(generated_filter(L, work[i] | work[j]).elements);
        }

    std::vector<Filter> out;
    out.reserve(family.size());
    for (const Subset& s : family) out.push_back(Filter{s});
    std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
        return Subset::canonical_less(a.elements, b.elements);
    });
    return out;
}

bool is_prime(const ResiduatedLattice& L, const Filter& f) {
    if (f.elements.is_full()) return false;
    for (Element x = 0; x < L.size(); ++x)
        for (Element y = x; y < L.size(); ++y)
            if (f.contains(L.join(x, y)) && !f.contains(x) && !f.contains(y))
                return false;
    return true;
}

std::vector<PrimeFilter> prime_spectrum(const ResiduatedLattice& L) {
    std::vector<PrimeFilter> out;
    for (const Filter& f : all_filters(L))
        if (is_prime(L, f)) out.push_back(PrimeFilter{f, static_cast<int>(out.size())});
    return out;
}

Filter o_of_p(const ResiduatedLattice& L, const PrimeFilter& p) {
    Subset s(L.size());
    for (Element x = 0; x < L.size(); ++x)
        for (Element a = 0; a < L.size(); ++a)
            if (!p.contains(a) && L.join(a, x) == L.top()) {
                s.set(x);
                break;
            }
    Filter result{s};
    if (!is_filter(L, s) || s.is_full() || !s.subset_of(p.filter.elements))
        throw InternalError("separator filter O(P) is not a proper filter inside P");
    return result;
}

PrimeFilter separate_with_prime(const ResiduatedLattice& L, const Filter& f, Element a) {
    for (const PrimeFilter& p : prime_spectrum(L))
        if (f.elements.subset_of(p.filter.elements) && !p.contains(a)) return p;
    throw InternalError("prime separation: no prime contains the filter and omits " +
                        L.name(a));
}

}  // namespace reslat
