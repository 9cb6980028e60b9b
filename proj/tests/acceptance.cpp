// Acceptance suite: one pass/fail line per criterion. Each criterion is
// asserted exactly as stated, with the worked-example fixtures as inputs.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "reslat/explorer.hpp"
#include "reslat/io.hpp"
#include "reslat/report.hpp"
#include "reslat/sheaf.hpp"
#include "support.hpp"

using namespace reslat;
using namespace testsupport;

namespace {

struct Criterion {
    bool passed = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            details.push_back(what);
        }
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Minimum wall time over a few repetitions; the computations are pure, and
// the minimum is what the machine can actually do when not preempted.
double timed_min_ms(const std::function<void()>& work, int reps = 3) {
    double best = 1e18;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        work();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

std::string show_sets(const ResiduatedLattice& L, const std::vector<Subset>& sets) {
    std::string out;
    for (const Subset& s : sets) {
        if (!out.empty()) out += " ";
        out += format_set(L, s);
    }
    return out;
}

std::vector<Subset> prime_sets(const ResiduatedLattice& L) {
    std::vector<Subset> out;
    for (const PrimeFilter& p : prime_spectrum(L)) out.push_back(p.filter.elements);
    return out;
}

// Criterion 1: the five-element worked example lists exactly the five stated
// filters, the two stated primes, and O(P) = {1} for both.
Criterion criterion1() {
    Criterion c;
    ResiduatedLattice L = load_lattice_file(fixture_path("l5.lat"));
    std::vector<Subset> filters;
    for (const Filter& f : all_filters(L)) filters.push_back(f.elements);
    std::vector<Subset> expected_filters = {
        set_of(L, {"1"}), set_of(L, {"c", "1"}), set_of(L, {"a", "c", "1"}),
        set_of(L, {"b", "c", "1"}), L.carrier()};
    c.require(filters == expected_filters,
              "filters differ: got " + show_sets(L, filters));

    std::vector<Subset> primes = prime_sets(L);
    std::vector<Subset> expected_primes = {set_of(L, {"a", "c", "1"}),
                                           set_of(L, {"b", "c", "1"})};
    c.require(primes == expected_primes,
              "primes differ: expected " + show_sets(L, expected_primes) + ", got " +
                  show_sets(L, primes) + " ({1} is prime here: no two elements below 1 "
                  "join to 1)");

    for (const PrimeFilter& p : prime_spectrum(L)) {
        if (p.filter.elements == expected_primes[0] ||
            p.filter.elements == expected_primes[1])
            c.require(o_of_p(L, p).elements == set_of(L, {"1"}),
                      "O(" + format_set(L, p.filter.elements) + ") differs from {1}");
    }
    double ms = timed_min_ms([&] {
        ResiduatedLattice M = load_lattice_file(fixture_path("l5.lat"));
        for (const PrimeFilter& p : prime_spectrum(M)) o_of_p(M, p);
        all_filters(M);
    });
    c.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
    return c;
}

// Criterion 2: the four-element worked example has four filters, the two
// stated primes, and O(P) = P for both.
Criterion criterion2() {
    Criterion c;
    ResiduatedLattice L = load_lattice_file(fixture_path("l4.lat"));
    std::vector<Subset> filters;
    for (const Filter& f : all_filters(L)) filters.push_back(f.elements);
    std::vector<Subset> expected_filters = {set_of(L, {"1"}), set_of(L, {"a", "1"}),
                                            set_of(L, {"b", "1"}), L.carrier()};
    c.require(filters == expected_filters,
              "filters differ: got " + show_sets(L, filters));

    std::vector<Subset> primes = prime_sets(L);
    std::vector<Subset> expected_primes = {set_of(L, {"a", "1"}), set_of(L, {"b", "1"})};
    c.require(primes == expected_primes, "primes differ: got " + show_sets(L, primes));

    for (const PrimeFilter& p : prime_spectrum(L))
        c.require(o_of_p(L, p).elements == p.filter.elements,
                  "O(P) != P for " + format_set(L, p.filter.elements));
    double ms = timed_min_ms([&] {
        ResiduatedLattice M = load_lattice_file(fixture_path("l4.lat"));
        for (const PrimeFilter& p : prime_spectrum(M)) o_of_p(M, p);
        all_filters(M);
    });
    c.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
    return c;
}

// Criterion 3: representation verdicts — l5 injective and NOT surjective with
// |Gamma| = 25; l4 injective and surjective with |Gamma| = 4; l2 bijective.
Criterion criterion3() {
    Criterion c;
    auto timed_represent = [&](const char* file, double& ms) {
        RepresentationReport out = represent(load_lattice_file(fixture_path(file)));
        ms = timed_min_ms([&] { represent(load_lattice_file(fixture_path(file))); });
        return out;
    };
    {
        double ms = 0;
        RepresentationReport r = timed_represent("l5.lat", ms);
        c.require(r.injective, "l5: not injective");
        c.require(r.surjective == Verdict::no,
                  std::string("l5: expected NOT surjective, got ") +
                      verdict_name(r.surjective));
        c.require(r.gamma_size == std::size_t{25},
                  "l5: expected |Gamma| = 25, got " +
                      (r.gamma_size ? std::to_string(*r.gamma_size) : "unknown"));
        c.require(ms < 1000.0, "l5 took " + std::to_string(ms) + " ms");
    }
    {
        double ms = 0;
        RepresentationReport r = timed_represent("l4.lat", ms);
        c.require(r.injective, "l4: not injective");
        c.require(r.surjective == Verdict::yes, "l4: not surjective");
        c.require(r.gamma_size == std::size_t{4}, "l4: |Gamma| != 4");
        c.require(ms < 1000.0, "l4 took " + std::to_string(ms) + " ms");
    }
    {
        double ms = 0;
        RepresentationReport r = timed_represent("l2.lat", ms);
        c.require(r.injective && r.surjective == Verdict::yes &&
                      r.gamma_size == std::size_t{2},
                  "l2: not bijective");
        c.require(ms < 1000.0, "l2 took " + std::to_string(ms) + " ms");
    }
    return c;
}

// Criterion 4: the theorem suite passes on the catalog and on every lattice
// streamed at sizes 2..5, inside ten minutes.
Criterion criterion4() {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, ResiduatedLattice>> instances;
    for (const ResiduatedLattice& L : catalog())
        instances.emplace_back("catalog n=" + std::to_string(L.size()), L);
    for (int n = 2; n <= 5; ++n) {
        int i = 0;
        enumerate_lattices(n, [&](const GeneratedLattice& g) {
            instances.emplace_back(
                "stream n=" + std::to_string(n) + " #" + std::to_string(i++), g.lattice);
        });
    }

    for (const auto& [label, L] : instances) {
        try {
            std::vector<Filter> filters = all_filters(L);
            std::vector<PrimeFilter> primes = prime_spectrum(L);
            FiniteTopology topology = stone_topology(L, filters, primes);
            ValidationReport topo = verify_topology(topology);
            c.require(topo.passed, label + ": stone topology axioms");

            SheafSpace s = build_sheaf(L);
            for (const auto& [name, report] : run_sheaf_checks(s))
                c.require(report.passed, label + ": " + name);

            Subset inter_p = L.carrier();
            Subset inter_o = L.carrier();
            for (const PrimeFilter& p : primes) {
                inter_p = inter_p & p.filter.elements;
                inter_o = inter_o & o_of_p(L, p).elements;
            }
            c.require(inter_p == Subset::single(L.size(), L.top()),
                      label + ": spectrum intersection not trivial");
            c.require(inter_o == Subset::single(L.size(), L.top()),
                      label + ": separator intersection not trivial");

            RepresentationReport rep = represent(s);
            c.require(rep.injective, label + ": representation not injective");
        } catch (const std::exception& e) {
            c.require(false, label + ": " + e.what());
        }
        if (!c.passed && c.details.size() > 10) break;
    }
    double ms = ms_since(t0);
    c.require(ms < 600000.0, "suite took " + std::to_string(ms) + " ms");
    if (c.passed)
        c.details.push_back(std::to_string(instances.size()) + " lattices checked in " +
                            std::to_string(static_cast<int>(ms)) + " ms");
    return c;
}

// Criterion 5: oracle equivalences on every catalog lattice, exhaustively.
Criterion criterion5() {
    Criterion c;
    for (const ResiduatedLattice& L : catalog()) {
        const int n = L.size();
        const std::string label = "n=" + std::to_string(n);

        // (a) The two filter characterizations agree on all subsets.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Subset s(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.set(i);
            bool direct = is_filter(L, s);
            bool alt = !s.empty() && is_upward_closed(L, s) && is_filter_alt(L, s);
            if (direct != alt) {
                c.require(false, label + ": filter characterizations disagree");
                break;
            }
        }

        // (b) Fast enumeration equals the subset-scan oracle.
        std::vector<Subset> fast;
        for (const Filter& f : all_filters(L)) fast.push_back(f.elements);
        std::vector<Subset> scanned;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Subset s(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.set(i);
            if (is_filter(L, s)) scanned.push_back(s);
        }
        std::sort(scanned.begin(), scanned.end(), Subset::canonical_less);
        c.require(fast == scanned, label + ": enumeration differs from the scan oracle");

        // (c) The two identities and the prime characterization.
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                Subset px = generated_filter(L, Subset::single(n, x)).elements;
                Subset py = generated_filter(L, Subset::single(n, y)).elements;
                Subset pj = generated_filter(L, Subset::single(n, L.join(x, y))).elements;
                if ((px & py) != pj)
                    c.require(false, label + ": principal filter identity fails");
                for (Element z = 0; z < n; ++z)
                    if (!L.leq(L.tensor(L.join(x, y), L.join(x, z)),
                               L.join(x, L.tensor(y, z))))
                        c.require(false, label + ": join/tensor inequality fails");
            }
        std::vector<Filter> filters = all_filters(L);
        for (const Filter& f : filters) {
            if (f.elements.is_full()) continue;
            bool pairwise = true;
            for (const Filter& f1 : filters)
                for (const Filter& f2 : filters)
                    if ((f1.elements & f2.elements).subset_of(f.elements) &&
                        !f1.elements.subset_of(f.elements) &&
                        !f2.elements.subset_of(f.elements))
                        pairwise = false;
            if (is_prime(L, f) != pairwise) {
                c.require(false, label + ": prime characterizations disagree");
                break;
            }
        }

        // (d) D is insensitive to generating, exhaustively.
        std::vector<PrimeFilter> primes = prime_spectrum(L);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Subset x(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) x.set(i);
            if (d_set(L, primes, x) !=
                d_set(L, primes, generated_filter(L, x).elements)) {
                c.require(false, label + ": D(X) != D(<X>)");
                break;
            }
        }
    }
    return c;
}

// Criterion 6: negative controls fail loudly.
Criterion criterion6() {
    Criterion c;
    // Hand-built space with two points over one prime that every base open
    // merges; the local homeomorphism check must fail and name a witness.
    {
        ResiduatedLattice L = ResiduatedLattice::from_tables(l2_tables());
        SheafSpace s;
        s.lattice = L;
        s.filters = all_filters(L);
        s.primes = prime_spectrum(L);
        s.base_space.point_count = 1;
        s.base_space.opens = {Subset(1), Subset::full(1)};
        s.base_space.base = {{L.top(), Subset::full(1)}};
        s.stalks.push_back(quotient(L, Filter{Subset::single(L.size(), L.top())}));
        s.stalk_offset = {0};
        s.points = {StalkPoint{0, 0}, StalkPoint{0, 1}};
        Subset merged = Subset::full(2);
        s.total_base = {TotalBaseOpen{0, 0, merged}};
        s.total_base_sets = {merged};
        s.total_opens = {Subset(2), merged};
        s.total_opens_complete = true;

        ValidationReport r = check_local_homeomorphism(s);
        c.require(!r.passed, "broken space passed the local homeomorphism check");
        if (!r.passed) {
            c.require(!r.violations.front().witness.empty() &&
                          !r.violations.front().detail.empty(),
                      "failure carries no witness");
        }
    }
    // Corrupted tensor table: the CLI names the axiom and exits 1.
    {
        CliResult r = run_cli("validate " + fixture_path("bad-tensor.lat"));
        c.require(r.exit_code == 1, "corrupted tensor did not exit 1");
        c.require(r.output.find("monoid identity") != std::string::npos,
                  "violated axiom not named");
    }
    return c;
}

// Criterion 7: byte-identical CLI output across runs and job counts.
Criterion criterion7() {
    Criterion c;
    const std::string f5 = fixture_path("l5.lat");
    const std::string f4 = fixture_path("l4.lat");
    const std::vector<std::string> invocations = {
        "validate " + f5,  "filters " + f5,
        "spec " + f4 + " --format json", "topology " + f5,
        "sheaf " + f4,     "represent " + f5 + " --format json",
        "survey --size 3", "survey --size 4 --format json"};
    for (const std::string& args : invocations) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        c.require(a.exit_code == b.exit_code && a.output == b.output,
                  "non-deterministic: " + args);
    }
    CliResult one = run_cli("survey --size 4 --jobs 1");
    CliResult three = run_cli("survey --size 4 --jobs 3");
    c.require(one.output == three.output, "survey differs across --jobs");
    return c;
}

struct Entry {
    int number;
    const char* label;
    std::function<Criterion()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);

    const std::vector<Entry> entries = {
        {1, "five-element worked example reproduction", criterion1},
        {2, "four-element worked example reproduction", criterion2},
        {3, "representation verdicts on the fixtures", criterion3},
        {4, "theorem suite over the catalog and all lattices up to size 5", criterion4},
        {5, "oracle equivalences", criterion5},
        {6, "negative controls", criterion6},
        {7, "CLI determinism", criterion7},
    };

    bool all_passed = true;
    for (const Entry& e : entries) {
        if (only != 0 && e.number != only) continue;
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.passed = false;
            c.details.push_back(std::string("exception: ") + ex.what());
        }
        std::cout << "criterion " << e.number << " (" << e.label
                  << "): " << (c.passed ? "PASS" : "FAIL") << "\n";
        for (const std::string& d : c.details) std::cout << "  - " << d << "\n";
        all_passed = all_passed && c.passed;
    }
    return all_passed ? 0 : 1;
}
