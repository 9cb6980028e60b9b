#include "reslat/sheaf.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace reslat {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

RawTables raw_from(const ResiduatedLattice& L) {
    RawTables t;
    t.names = L.names();
    t.meet = L.meet_table();
    t.join = L.join_table();
    t.tensor = L.tensor_table();
    t.residuum = L.residuum_table();
    return t;
}

// Stalk operation dispatch: 0 meet, 1 join, 2 tensor, 3 residuum.
constexpr const char* kOpNames[4] = {"meet", "join", "tensor", "residuum"};

Element apply_op(const ResiduatedLattice& L, int op, Element x, Element y) {
    switch (op) {
        case 0: return L.meet(x, y);
        case 1: return L.join(x, y);
        case 2: return L.tensor(x, y);
        default: return L.residuum(x, y);
    }
}

}  // namespace

Subset SheafSpace::project(const Subset& pts) const {
    Subset out(prime_count());
    for (int e : pts.members()) out.set(projection(e));
    return out;
}

bool SheafSpace::total_is_open(const Subset& s) const {
    for (int e : s.members()) {
        bool inside = false;
        for (const Subset& b : total_base_sets)
            if (b.test(e) && b.subset_of(s)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool SheafSpace::total_relatively_open(const Subset& s, const Subset& u) const {
    for (int e : s.members()) {
        bool inside = false;
        for (const Subset& b : total_base_sets)
            if (b.test(e) && (b & u).subset_of(s)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool SheafSpace::stone_relatively_open(const Subset& s, const Subset& u) const {
    for (int p : s.members()) {
        bool inside = false;
        for (const auto& [a, d] : base_space.base)
            if (d.test(p) && (d & u).subset_of(s)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

std::string SheafSpace::point_label(int point) const {
    const StalkPoint& sp = points[point];
    const QuotientAlgebra& stalk = stalks[sp.prime_index];
    return "P" + std::to_string(sp.prime_index) + ":" +
           stalk.algebra.name(sp.class_index);
}

SheafSpace build_sheaf(const ResiduatedLattice& L, std::size_t max_total_opens) {
    SheafSpace s;
    s.lattice = L;
    s.filters = all_filters(L);
    s.primes = prime_spectrum(L);
    if (s.primes.empty())
        throw InternalError("prime separation: spectrum of a nontrivial lattice is empty");
    s.base_space = stone_topology(L, s.filters, s.primes);

    for (const PrimeFilter& p : s.primes) s.stalks.push_back(quotient(L, o_of_p(L, p)));

    for (int p = 0; p < s.prime_count(); ++p) {
        s.stalk_offset.push_back(s.point_count());
        for (int c = 0; c < s.stalks[p].class_count(); ++c)
            s.points.push_back(StalkPoint{p, c});
    }

    const int np = s.point_count();
    std::unordered_set<Subset, Subset::Hash> seen;
    for (int f = 0; f < static_cast<int>(s.filters.size()); ++f) {
        Subset d = d_set(L, s.primes, s.filters[f].elements);
        for (Element a = 0; a < L.size(); ++a) {
            Subset pts(np);
            for (int p : d.members()) pts.set(s.point_index(p, s.stalks[p].class_of[a]));
            s.total_base.push_back(TotalBaseOpen{f, a, pts});
            if (seen.insert(pts).second) s.total_base_sets.push_back(pts);
        }
    }
    std::sort(s.total_base_sets.begin(), s.total_base_sets.end(), Subset::canonical_less);

    ValidationReport base_ok = check_base_criterion(s);
    if (!base_ok.passed)
        throw InternalError("total space base criterion: " + base_ok.violations.front().axiom);

    // Union closure of the base; opens of a base-generated finite topology
    // are exactly the finite unions. Materialized only below the cap.
    std::unordered_set<Subset, Subset::Hash> opens;
    std::vector<Subset> work;
    auto push = [&](const Subset& o) {
        if (opens.insert(o).second) work.push_back(o);
    };
    push(Subset(np));
    for (const Subset& b : s.total_base_sets) push(b);
    bool complete = true;
    for (std::size_t i = 0; i < work.size() && complete; ++i)
        for (std::size_t j = 0; j < i && complete; ++j) {
            push(work[i] | work[j]);
            if (opens.size() > max_total_opens) complete = false;
        }
    if (complete) {
        s.total_opens.assign(work.begin(), work.end());
        std::sort(s.total_opens.begin(), s.total_opens.end(), Subset::canonical_less);
        s.total_opens_complete = true;
        ValidationReport axioms =
            verify_open_family(s.total_opens, s.total_base_sets, np);
        if (!axioms.passed)
            throw InternalError("total space topology axioms: " +
                                axioms.violations.front().axiom);
    }
    return s;
}

ValidationReport check_base_criterion(const SheafSpace& s) {
    ValidationReport r;
    Subset covered(s.point_count());
    for (const Subset& b : s.total_base_sets) covered = covered | b;
    if (!covered.is_full()) {
        for (int e = 0; e < s.point_count(); ++e)
            if (!covered.test(e)) {
                r.fail("base does not cover the total space", {e},
                       "uncovered point " + s.point_label(e));
                break;
            }
    }
    const auto& bs = s.total_base_sets;
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i; j < bs.size(); ++j) {
            Subset inter = bs[i] & bs[j];
            for (int e : inter.members()) {
                bool refined = false;
                for (const Subset& b : bs)
                    if (b.test(e) && b.subset_of(inter)) {
                        refined = true;
                        break;
                    }
                if (!refined) {
                    r.fail("base intersections do not refine",
                           {static_cast<int>(i), static_cast<int>(j), e},
                           "point " + s.point_label(e));
                    return r;
                }
            }
        }
    return r;
}

ValidationReport check_fibers(const SheafSpace& s) {
    ValidationReport r;
    for (int p = 0; p < s.prime_count(); ++p) {
        int fiber = 0;
        for (const StalkPoint& pt : s.points)
            if (pt.prime_index == p) ++fiber;
        if (fiber == 0) {
            r.fail("projection not surjective", {p});
            continue;
        }
        if (fiber != s.stalks[p].class_count()) {
            r.fail("fiber differs from stalk", {p});
            continue;
        }
        ValidationReport stalk_ok = validate(raw_from(s.stalks[p].algebra));
        if (!stalk_ok.passed)
            r.fail("fiber algebra axioms", {p},
                   "stalk over P" + std::to_string(p) + ": " +
                       stalk_ok.violations.front().axiom);
    }
    return r;
}

ValidationReport check_local_homeomorphism(const SheafSpace& s) {
    ValidationReport r;
    for (int e = 0; e < s.point_count(); ++e) {
        bool found = false;
        for (const Subset& u : s.total_base_sets) {
            if (!u.test(e)) continue;
            Subset image = s.project(u);
            // Bijectivity of the restriction onto its image.
            if (u.count() != image.count()) continue;
            if (!s.base_space.is_open(image)) continue;
            // Continuity: preimages of relative opens of the image are
            // relatively open in u.
            bool ok = true;
            for (const Subset& o : s.base_space.opens) {
                Subset pre(s.point_count());
                for (int pt : u.members())
                    if (o.test(s.projection(pt))) pre.set(pt);
                if (!s.total_relatively_open(pre, u)) {
                    ok = false;
                    break;
                }
            }
            // Openness: images of relative base opens are relatively open.
            if (ok)
                for (const Subset& b : s.total_base_sets) {
                    if (!s.stone_relatively_open(s.project(b & u), image)) {
                        ok = false;
                        break;
                    }
                }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found)
            r.fail("local homeomorphism", {e},
                   "no base neighbourhood of " + s.point_label(e) +
                       " projects homeomorphically onto an open set");
    }
    return r;
}

ValidationReport check_operation_continuity(const SheafSpace& s) {
    ValidationReport r;
    const ResiduatedLattice& L = s.lattice;
    std::vector<Subset> d_of_filter;
    d_of_filter.reserve(s.filters.size());
    for (const Filter& f : s.filters)
        d_of_filter.push_back(d_set(L, s.primes, f.elements));

    for (int op = 0; op < 4; ++op) {
        for (int p = 0; p < s.prime_count(); ++p) {
            const QuotientAlgebra& stalk = s.stalks[p];
            for (int ca = 0; ca < stalk.class_count(); ++ca)
                for (int cb = 0; cb < stalk.class_count(); ++cb) {
                    int cr = apply_op(stalk.algebra, op, ca, cb);
                    int result = s.point_index(p, cr);
                    for (const Subset& w : s.total_base_sets) {
                        if (!w.test(result)) continue;
                        // Look for a fibered base neighbourhood (B(a,b), F')
                        // of the pair whose op image lies inside w.
                        bool found = false;
                        for (Element a : stalk.classes[ca].members()) {
                            for (Element b : stalk.classes[cb].members()) {
                                Element c = apply_op(L, op, a, b);
                                for (std::size_t f = 0;
                                     f < s.filters.size() && !found; ++f) {
                                    const Subset& d = d_of_filter[f];
                                    if (!d.test(p)) continue;
                                    bool inside = true;
                                    for (int q : d.members())
                                        if (!w.test(s.point_index(
                                                q, s.stalks[q].class_of[c]))) {
                                            inside = false;
                                            break;
                                        }
                                    if (inside) found = true;
                                }
                                if (found) break;
                            }
                            if (found) break;
                        }
                        if (!found) {
                            r.fail(std::string("operation continuity: ") + kOpNames[op],
                                   {p, ca, cb},
                                   "no pair neighbourhood maps into a result "
                                   "neighbourhood at " +
                                       s.point_label(result));
                            return r;
                        }
                    }
                }
        }
    }
    return r;
}

bool section_continuous(const SheafSpace& s, const GlobalSection& sec) {
    for (const Subset& b : s.total_base_sets) {
        Subset pre(s.prime_count());
        for (int p = 0; p < s.prime_count(); ++p)
            if (b.test(s.point_index(p, sec.choice[p]))) pre.set(p);
        if (!s.base_space.is_open(pre)) return false;
    }
    return true;
}

ValidationReport check_zero_one_sections(const SheafSpace& s) {
    ValidationReport r;
    const char* names[2] = {"zero section continuity", "one section continuity"};
    for (int which = 0; which < 2; ++which) {
        Element e = which == 0 ? s.lattice.bottom() : s.lattice.top();
        GlobalSection sec;
        for (int p = 0; p < s.prime_count(); ++p)
            sec.choice.push_back(s.stalks[p].class_of[e]);
        if (!section_continuous(s, sec)) r.fail(names[which], {e});
    }
    return r;
}

std::vector<std::pair<std::string, ValidationReport>> run_sheaf_checks(const SheafSpace& s) {
    std::vector<std::pair<std::string, ValidationReport>> out;
    out.emplace_back("fibers are residuated lattices", check_fibers(s));
    out.emplace_back("total space base criterion", check_base_criterion(s));
    out.emplace_back("local homeomorphism", check_local_homeomorphism(s));
    out.emplace_back("operation continuity", check_operation_continuity(s));
    out.emplace_back("zero and one sections continuous", check_zero_one_sections(s));
    return out;
}

GlobalSection hat(const SheafSpace& s, Element a) {
    GlobalSection sec;
    for (int p = 0; p < s.prime_count(); ++p)
        sec.choice.push_back(s.stalks[p].class_of[a]);

    // Preimage identity: hat(a)^-1(D(F,b)) = D(F) n V(a->b) n V(b->a),
    // with V computed from the stalk filters O(P).
    const ResiduatedLattice& L = s.lattice;
    auto v_of = [&](Element x) {
        Subset v(s.prime_count());
        for (int p = 0; p < s.prime_count(); ++p)
            if (s.stalks[p].filter.contains(x)) v.set(p);
        return v;
    };
    for (const Filter& f : s.filters) {
        Subset d = d_set(L, s.primes, f.elements);
        for (Element b = 0; b < L.size(); ++b) {
            Subset lhs(s.prime_count());
            for (int p : d.members())
                if (s.stalks[p].class_of[a] == s.stalks[p].class_of[b]) lhs.set(p);
            Subset rhs = d & v_of(L.residuum(a, b)) & v_of(L.residuum(b, a));
            if (lhs != rhs)
                throw InternalError("section preimage identity fails for " + L.name(a));
            if (!s.base_space.is_open(lhs))
                throw InternalError("section " + L.name(a) + " has a non-open preimage");
        }
    }
    return sec;
}

std::optional<int> SectionAlgebra::index_of(const GlobalSection& s) const {
    auto it = std::find(sections.begin(), sections.end(), s);
    if (it == sections.end()) return std::nullopt;
    return static_cast<int>(it - sections.begin());
}

SectionAlgebra enumerate_sections(const SheafSpace& s, std::uint64_t budget) {
    const int m = s.prime_count();
    std::uint64_t product = 1;
    for (const QuotientAlgebra& stalk : s.stalks)
        product = saturating_mul(product, static_cast<std::uint64_t>(stalk.class_count()));
    if (product > budget) throw BudgetExceeded(product);

    // Specialization preorders; a continuous map must preserve them, which
    // prunes the search. The definitional check still decides membership.
    std::vector<std::vector<bool>> spec_leq(m, std::vector<bool>(m, true));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (const Subset& o : s.base_space.opens)
                if (o.test(p) && !o.test(q)) {
                    spec_leq[p][q] = false;
                    break;
                }
    const int np = s.point_count();
    std::vector<std::vector<bool>> point_leq(np, std::vector<bool>(np, true));
    for (int e = 0; e < np; ++e)
        for (int f = 0; f < np; ++f)
            for (const Subset& b : s.total_base_sets)
                if (b.test(e) && !b.test(f)) {
                    point_leq[e][f] = false;
                    break;
                }

    SectionAlgebra out;
    std::vector<int> choice(m, 0);
    auto dfs = [&](auto&& self, int p) -> void {
        if (p == m) {
            GlobalSection sec{choice};
            if (section_continuous(s, sec)) out.sections.push_back(std::move(sec));
            return;
        }
        for (int c = 0; c < s.stalks[p].class_count(); ++c) {
            choice[p] = c;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
                int eq = s.point_index(q, choice[q]);
                int ep = s.point_index(p, c);
                if (spec_leq[q][p] && !point_leq[eq][ep]) ok = false;
                if (spec_leq[p][q] && !point_leq[ep][eq]) ok = false;
            }
            if (ok) self(self, p + 1);
        }
    };
    dfs(dfs, 0);

    // Pointwise algebra; closure under the operations is a theorem.
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < out.sections.size(); ++i)
        index[out.sections[i].choice] = static_cast<int>(i);

    const int k = static_cast<int>(out.sections.size());
    RawTables t;
    for (int i = 0; i < k; ++i) t.names.push_back("s" + std::to_string(i));
    t.meet = OpTable(k);
    t.join = OpTable(k);
    t.tensor = OpTable(k);
    t.residuum = OpTable(k);
    std::vector<int> combined(m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int op = 0; op < 4; ++op) {
                for (int p = 0; p < m; ++p)
                    combined[p] = apply_op(s.stalks[p].algebra, op,
                                           out.sections[i].choice[p],
                                           out.sections[j].choice[p]);
                auto it = index.find(combined);
                if (it == index.end())
                    throw InternalError(
                        std::string("global sections not closed under pointwise ") +
                        kOpNames[op]);
                switch (op) {
                    case 0: t.meet.at(i, j) = it->second; break;
                    case 1: t.join.at(i, j) = it->second; break;
                    case 2: t.tensor.at(i, j) = it->second; break;
                    default: t.residuum->at(i, j) = it->second; break;
                }
            }
    try {
        out.algebra = ResiduatedLattice::from_tables(std::move(t));
    } catch (const ValidationFailed& e) {
        throw InternalError("global section algebra violates the axioms: " +
                            std::string(e.what()));
    }
    return out;
}

ValidationReport stalk_projection_morphism(const SheafSpace& s, const SectionAlgebra& alg,
                                           int prime_index) {
    ValidationReport r;
    const QuotientAlgebra& stalk = s.stalks[prime_index];
    const int k = static_cast<int>(alg.sections.size());
    for (int op = 0; op < 4; ++op)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                int combined = apply_op(alg.algebra, op, i, j);
                int lhs = alg.sections[combined].choice[prime_index];
                int rhs = apply_op(stalk.algebra, op, alg.sections[i].choice[prime_index],
                                   alg.sections[j].choice[prime_index]);
                if (lhs != rhs) {
                    r.fail(std::string("projection morphism: ") + kOpNames[op], {i, j});
                    goto bounds;
                }
            }
bounds:
    if (alg.sections[alg.algebra.bottom()].choice[prime_index] !=
        stalk.class_of[s.lattice.bottom()])
        r.fail("projection morphism: bottom", {});
    if (alg.sections[alg.algebra.top()].choice[prime_index] !=
        stalk.class_of[s.lattice.top()])
        r.fail("projection morphism: top", {});
    return r;
}

RepresentationReport represent(const SheafSpace& s, std::uint64_t budget) {
    const ResiduatedLattice& L = s.lattice;
    RepresentationReport rep;
    for (Element a = 0; a < L.size(); ++a) rep.phi.push_back(hat(s, a));

    // Morphism property of a |-> hat(a), stalk-wise on every pair.
    for (Element a = 0; a < L.size(); ++a)
        for (Element b = 0; b < L.size(); ++b)
            for (int op = 0; op < 4; ++op)
                for (int p = 0; p < s.prime_count(); ++p) {
                    int lhs = s.stalks[p].class_of[apply_op(L, op, a, b)];
                    int rhs = apply_op(s.stalks[p].algebra, op, rep.phi[a].choice[p],
                                       rep.phi[b].choice[p]);
                    if (lhs != rhs)
                        throw InternalError(
                            std::string("representation morphism fails for ") +
                            kOpNames[op]);
                }

    rep.injective = true;
    for (Element a = 0; a < L.size() && rep.injective; ++a)
        for (Element b = a + 1; b < L.size(); ++b)
            if (rep.phi[a] == rep.phi[b]) {
                rep.injective = false;
                break;
            }
    if (!rep.injective)
        throw InternalError("representation injectivity fails (trivial separator intersection)");
    rep.image_size = static_cast<std::size_t>(L.size());

    try {
        SectionAlgebra gamma = enumerate_sections(s, budget);
        rep.gamma_size = gamma.sections.size();
        for (Element a = 0; a < L.size(); ++a)
            if (!gamma.index_of(rep.phi[a]))
                throw InternalError("representation image escapes the section algebra");
        rep.surjective =
            gamma.sections.size() == rep.image_size ? Verdict::yes : Verdict::no;
        std::uint64_t product = 1;
        for (const QuotientAlgebra& stalk : s.stalks)
            product = saturating_mul(product,
                                     static_cast<std::uint64_t>(stalk.class_count()));
        rep.section_product = product;
    } catch (const BudgetExceeded& e) {
        rep.surjective = Verdict::unknown;
        rep.section_product = e.product;
    }
    return rep;
}

RepresentationReport represent(const ResiduatedLattice& L, std::uint64_t budget) {
    return represent(build_sheaf(L), budget);
}

std::vector<PartialSection> sections_over(const SheafSpace& s, const Subset& domain,
                                          std::uint64_t budget) {
    std::vector<int> in = domain.members();
    std::uint64_t product = 1;
    for (int p : in)
        product = saturating_mul(product,
                                 static_cast<std::uint64_t>(s.stalks[p].class_count()));
    if (product > budget) throw BudgetExceeded(product);

    std::vector<PartialSection> out;
    std::vector<int> choice(s.prime_count(), -1);
    auto continuous = [&]() {
        for (const Subset& b : s.total_base_sets) {
            Subset pre(s.prime_count());
            for (int p : in)
                if (b.test(s.point_index(p, choice[p]))) pre.set(p);
            if (!s.stone_relatively_open(pre, domain)) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == in.size()) {
            if (continuous()) out.push_back(PartialSection{domain, choice});
            return;
        }
        for (int c = 0; c < s.stalks[in[i]].class_count(); ++c) {
            choice[in[i]] = c;
            self(self, i + 1);
        }
        choice[in[i]] = -1;
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace reslat
