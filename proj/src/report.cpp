#include "reslat/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "reslat/io.hpp"

namespace reslat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string index_set(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.members()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

ordered_json names_of(const ResiduatedLattice& L, const Subset& s) {
    ordered_json arr = ordered_json::array();
    for (Element x : s.members()) arr.push_back(L.name(x));
    return arr;
}

ordered_json violations_json(const ResiduatedLattice* L,
                             const std::vector<Violation>& vs) {
    ordered_json arr = ordered_json::array();
    for (const Violation& v : vs) {
        ordered_json item;
        item["axiom"] = v.axiom;
        ordered_json witness = ordered_json::array();
        for (Element x : v.witness) {
            if (L && x >= 0 && x < L->size())
                witness.push_back(L->name(x));
            else
                witness.push_back(x);
        }
        item["witness"] = witness;
        if (!v.detail.empty()) item["detail"] = v.detail;
        arr.push_back(std::move(item));
    }
    return arr;
}

void print_check(std::ostringstream& out, const std::string& name,
                 const ValidationReport& r, const ResiduatedLattice* L, bool& all_ok) {
    out << "  " << name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    for (const Violation& v : r.violations)
        out << "    - " << format_violation(L, v) << "\n";
    all_ok = all_ok && r.passed;
}

ordered_json check_json(const std::string& name, const ValidationReport& r,
                        const ResiduatedLattice* L) {
    ordered_json item;
    item["name"] = name;
    item["passed"] = r.passed;
    item["violations"] = violations_json(L, r.violations);
    return item;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string format_set(const ResiduatedLattice& L, const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (Element x : s.members()) {
        if (!first) out += ",";
        out += L.name(x);
        first = false;
    }
    return out + "}";
}

std::string format_violation(const ResiduatedLattice* L, const Violation& v) {
    std::string out = v.axiom + ": witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out += ",";
        Element x = v.witness[i];
        out += (L && x >= 0 && x < L->size()) ? L->name(x) : std::to_string(x);
    }
    out += ")";
    if (!v.detail.empty()) out += " — " + v.detail;
    return out;
}

Rendered render_validate(const RawTables& raw, bool residuum_derived,
                         const ValidationReport& report, Format f) {
    // Witness indices can name elements even when validation fails.
    const int n = raw.size();
    auto witness_name = [&](Element x) {
        return (x >= 0 && x < n) ? raw.names[x] : std::to_string(x);
    };
    if (f == Format::json) {
        ordered_json doc;
        doc["elements"] = n;
        doc["residuum"] = residuum_derived ? "derived" : "given";
        doc["passed"] = report.passed;
        ordered_json arr = ordered_json::array();
        for (const Violation& v : report.violations) {
            ordered_json item;
            item["axiom"] = v.axiom;
            ordered_json witness = ordered_json::array();
            for (Element x : v.witness) witness.push_back(witness_name(x));
            item["witness"] = witness;
            if (!v.detail.empty()) item["detail"] = v.detail;
            arr.push_back(std::move(item));
        }
        doc["violations"] = arr;
        return {dump(doc), report.passed};
    }
    std::ostringstream out;
    out << "elements: " << n << "\n";
    out << "residuum: " << (residuum_derived ? "derived" : "given") << "\n";
    out << "validation: " << (report.passed ? "passed" : "failed") << "\n";
    for (const Violation& v : report.violations) {
        out << "  " << v.axiom << ": witness (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out << ",";
            out << witness_name(v.witness[i]);
        }
        out << ")";
        if (!v.detail.empty()) out << " — " << v.detail;
        out << "\n";
    }
    return {out.str(), report.passed};
}

Rendered render_filters(const ResiduatedLattice& L, Format f) {
    std::vector<Filter> filters = all_filters(L);
    std::vector<PrimeFilter> primes = prime_spectrum(L);
    std::vector<Filter> separators;
    for (const PrimeFilter& p : primes) separators.push_back(o_of_p(L, p));

    if (f == Format::json) {
        ordered_json doc;
        ordered_json fs = ordered_json::array();
        for (const Filter& x : filters) fs.push_back(names_of(L, x.elements));
        doc["filters"] = fs;
        ordered_json ps = ordered_json::array();
        for (const PrimeFilter& p : primes) ps.push_back(names_of(L, p.filter.elements));
        doc["primes"] = ps;
        ordered_json os = ordered_json::array();
        for (const Filter& o : separators) os.push_back(names_of(L, o.elements));
        doc["o_of_p"] = os;
        return {dump(doc), true};
    }
    std::ostringstream out;
    out << "filters (" << filters.size() << "):\n";
    for (const Filter& x : filters) out << "  " << format_set(L, x.elements) << "\n";
    out << "prime filters (" << primes.size() << "):\n";
    for (const PrimeFilter& p : primes)
        out << "  P" << p.index << " = " << format_set(L, p.filter.elements) << "\n";
    out << "separator filters:\n";
    for (const PrimeFilter& p : primes)
        out << "  O(P" << p.index << ") = " << format_set(L, separators[p.index].elements)
            << "\n";
    return {out.str(), true};
}

Rendered render_spectrum(const ResiduatedLattice& L, Format f) {
    std::vector<PrimeFilter> primes = prime_spectrum(L);
    if (f == Format::json) {
        ordered_json doc;
        ordered_json ps = ordered_json::array();
        for (const PrimeFilter& p : primes) ps.push_back(names_of(L, p.filter.elements));
        doc["primes"] = ps;
        return {dump(doc), true};
    }
    std::ostringstream out;
    out << "prime filters (" << primes.size() << "):\n";
    for (const PrimeFilter& p : primes)
        out << "  P" << p.index << " = " << format_set(L, p.filter.elements) << "\n";
    return {out.str(), true};
}

Rendered render_topology(const ResiduatedLattice& L, Format f) {
    std::vector<Filter> filters = all_filters(L);
    std::vector<PrimeFilter> primes = prime_spectrum(L);
    FiniteTopology t = stone_topology(L, filters, primes);
    ValidationReport check = verify_topology(t);

    if (f == Format::json) {
        ordered_json doc;
        doc["points"] = t.point_count;
        ordered_json opens = ordered_json::array();
        for (const Subset& o : t.opens) opens.push_back(o.members());
        doc["opens"] = opens;
        ordered_json base = ordered_json::array();
        for (const auto& [a, d] : t.base) {
            ordered_json item;
            item["element"] = L.name(a);
            item["open"] = d.members();
            base.push_back(std::move(item));
        }
        doc["base"] = base;
        doc["checks"] = ordered_json::array(
            {check_json("stone topology axioms", check, &L)});
        return {dump(doc), check.passed};
    }
    std::ostringstream out;
    out << "points: " << t.point_count << "\n";
    out << "opens (" << t.opens.size() << "):\n";
    for (const Subset& o : t.opens) out << "  " << index_set(o) << "\n";
    out << "base:\n";
    for (const auto& [a, d] : t.base)
        out << "  D(" << L.name(a) << ") = " << index_set(d) << "\n";
    out << "checks:\n";
    bool ok = true;
    print_check(out, "stone topology axioms", check, &L, ok);
    return {out.str(), ok};
}

Rendered render_sheaf(const ResiduatedLattice& L, Format f) {
    SheafSpace s = build_sheaf(L);
    auto checks = run_sheaf_checks(s);
    bool ok = true;
    for (const auto& [name, report] : checks) ok = ok && report.passed;

    if (f == Format::json) {
        ordered_json doc;
        doc["primes"] = s.prime_count();
        ordered_json stalks = ordered_json::array();
        for (int p = 0; p < s.prime_count(); ++p) {
            const QuotientAlgebra& q = s.stalks[p];
            ordered_json item;
            item["prime"] = names_of(L, s.primes[p].filter.elements);
            item["o_of_p"] = names_of(L, q.filter.elements);
            ordered_json classes = ordered_json::array();
            for (const Subset& cls : q.classes) classes.push_back(names_of(L, cls));
            item["classes"] = classes;
            item["algebra"] = ordered_json::parse(serialize_quotient(q));
            stalks.push_back(std::move(item));
        }
        doc["stalks"] = stalks;
        doc["points"] = s.point_count();
        ordered_json base = ordered_json::array();
        for (const TotalBaseOpen& b : s.total_base) {
            ordered_json item;
            item["filter"] = names_of(L, s.filters[b.filter_index].elements);
            item["element"] = L.name(b.element);
            item["points"] = b.points.members();
            base.push_back(std::move(item));
        }
        doc["total_base"] = base;
        if (s.total_opens_complete)
            doc["total_opens"] = s.total_opens.size();
        else
            doc["total_opens"] = nullptr;
        ordered_json cs = ordered_json::array();
        for (const auto& [name, report] : checks) cs.push_back(check_json(name, report, &L));
        doc["checks"] = cs;
        return {dump(doc), ok};
    }
    std::ostringstream out;
    out << "primes: " << s.prime_count() << "\n";
    out << "stalks:\n";
    for (int p = 0; p < s.prime_count(); ++p) {
        const QuotientAlgebra& q = s.stalks[p];
        out << "  P" << p << ": O(P" << p << ") = " << format_set(L, q.filter.elements)
            << "; classes (" << q.class_count() << "):";
        for (const Subset& cls : q.classes) out << " " << format_set(L, cls);
        out << "\n";
    }
    out << "points: " << s.point_count() << "\n";
    out << "total base:\n";
    for (const TotalBaseOpen& b : s.total_base) {
        out << "  D(" << format_set(L, s.filters[b.filter_index].elements) << ", "
            << L.name(b.element) << ") = {";
        bool first = true;
        for (int e : b.points.members()) {
            if (!first) out << ",";
            out << s.point_label(e);
            first = false;
        }
        out << "}\n";
    }
    if (s.total_opens_complete)
        out << "total opens: " << s.total_opens.size() << "\n";
    else
        out << "total opens: not materialized (over cap)\n";
    out << "checks:\n";
    bool all_ok = true;
    for (const auto& [name, report] : checks) print_check(out, name, report, &L, all_ok);
    return {out.str(), all_ok};
}

Rendered render_represent(const ResiduatedLattice& L, std::uint64_t budget, Format f) {
    SheafSpace s = build_sheaf(L);
    RepresentationReport rep = represent(s, budget);
    std::vector<GlobalSection> sections;
    if (rep.surjective != Verdict::unknown) {
        SectionAlgebra gamma = enumerate_sections(s, budget);
        sections = gamma.sections;
    }

    if (f == Format::json) {
        ordered_json doc;
        doc["injective"] = rep.injective;
        doc["surjective"] = verdict_name(rep.surjective);
        if (rep.gamma_size)
            doc["gamma"] = *rep.gamma_size;
        else
            doc["gamma"] = nullptr;
        doc["image"] = rep.image_size;
        doc["candidate_sections"] = rep.section_product;
        ordered_json secs = ordered_json::array();
        for (const GlobalSection& sec : sections) secs.push_back(sec.choice);
        doc["sections"] = secs;
        ordered_json phi;
        for (Element a = 0; a < L.size(); ++a) {
            GlobalSection g = rep.phi[a];
            int idx = -1;
            for (std::size_t i = 0; i < sections.size(); ++i)
                if (sections[i] == g) idx = static_cast<int>(i);
            phi[L.name(a)] = idx >= 0 ? ordered_json(idx) : ordered_json(g.choice);
        }
        doc["phi"] = phi;
        return {dump(doc), true};
    }
    std::ostringstream out;
    out << "injective: " << (rep.injective ? "yes" : "no") << "\n";
    if (rep.surjective == Verdict::unknown)
        out << "surjective: unknown (" << rep.section_product
            << " candidate sections exceed the budget)\n";
    else
        out << "surjective: " << verdict_name(rep.surjective) << "\n";
    if (rep.gamma_size)
        out << "|Gamma|: " << *rep.gamma_size << "\n";
    else
        out << "|Gamma|: unknown\n";
    out << "|phi(L)|: " << rep.image_size << "\n";
    if (!sections.empty()) {
        out << "sections (" << sections.size() << "):\n";
        for (std::size_t i = 0; i < sections.size(); ++i) {
            out << "  s" << i << " = (";
            for (std::size_t p = 0; p < sections[i].choice.size(); ++p) {
                if (p) out << ",";
                out << sections[i].choice[p];
            }
            out << ")\n";
        }
        out << "phi:\n";
        for (Element a = 0; a < L.size(); ++a) {
            int idx = -1;
            for (std::size_t i = 0; i < sections.size(); ++i)
                if (sections[i] == rep.phi[a]) idx = static_cast<int>(i);
            out << "  " << L.name(a) << " -> s" << idx << "\n";
        }
    }
    return {out.str(), true};
}

Rendered render_survey(const std::vector<SurveyRow>& rows, bool timings, Format f) {
    std::size_t yes = 0, no = 0, unknown = 0;
    for (const SurveyRow& r : rows) {
        if (r.surjective == Verdict::yes) ++yes;
        else if (r.surjective == Verdict::no) ++no;
        else ++unknown;
    }

    auto join_ints = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };

    if (f == Format::json) {
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        for (const SurveyRow& r : rows) {
            ordered_json item;
            item["id"] = r.id;
            item["n"] = r.n;
            item["filters"] = r.filter_count;
            item["primes"] = r.prime_count;
            item["o_sizes"] = r.o_sizes;
            item["stalk_sizes"] = r.stalk_sizes;
            if (r.gamma_size)
                item["gamma"] = *r.gamma_size;
            else
                item["gamma"] = nullptr;
            item["surjective"] = verdict_name(r.surjective);
            if (timings) item["wall_ms"] = r.wall_ms;
            arr.push_back(std::move(item));
        }
        doc["rows"] = arr;
        ordered_json totals;
        totals["total"] = rows.size();
        totals["yes"] = yes;
        totals["no"] = no;
        totals["unknown"] = unknown;
        doc["totals"] = totals;
        return {dump(doc), true};
    }
    std::ostringstream out;
    out << "id\tn\tfilters\tprimes\to_sizes\tstalk_sizes\tgamma\tsurjective";
    if (timings) out << "\twall_ms";
    out << "\n";
    for (const SurveyRow& r : rows) {
        out << r.id << "\t" << r.n << "\t" << r.filter_count << "\t" << r.prime_count
            << "\t" << join_ints(r.o_sizes) << "\t" << join_ints(r.stalk_sizes) << "\t";
        if (r.gamma_size)
            out << *r.gamma_size;
        else
            out << "unknown";
        out << "\t" << verdict_name(r.surjective);
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", r.wall_ms);
            out << "\t" << buf;
        }
        out << "\n";
    }
    out << "# total=" << rows.size() << " yes=" << yes << " no=" << no
        << " unknown=" << unknown << "\n";
    return {out.str(), true};
}

}  // namespace reslat
