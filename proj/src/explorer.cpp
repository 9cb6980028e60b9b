#include "reslat/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace reslat {

namespace {

std::vector<std::string> carrier_names(int n) {
    std::vector<std::string> names;
    names.push_back("0");
    for (int i = 1; i < n - 1; ++i) names.push_back(std::string(1, 'a' + (i - 1)));
    names.push_back("1");
    return names;
}

struct Order {
    int n;
    std::vector<bool> leq;  // row-major
    OpTable meet, join;

    bool le(int x, int y) const { return leq[static_cast<std::size_t>(x) * n + y]; }
};

// All bounded lattice orders on {0 < middles < n-1}, by enumerating the three
// states (incomparable, <, >) per middle pair and keeping the transitive
// relations whose meets and joins all exist.
std::vector<Order> lattice_orders(int n) {
    std::vector<Order> out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) pairs.emplace_back(i, j);

    std::uint64_t codes = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) codes *= 3;

    for (std::uint64_t code = 0; code < codes; ++code) {
        Order ord;
        ord.n = n;
        ord.leq.assign(static_cast<std::size_t>(n) * n, false);
        auto set_le = [&](int x, int y) { ord.leq[static_cast<std::size_t>(x) * n + y] = true; };
        for (int x = 0; x < n; ++x) {
            set_le(x, x);
            set_le(0, x);
            set_le(x, n - 1);
        }
        std::uint64_t c = code;
        for (const auto& [i, j] : pairs) {
            switch (c % 3) {
                case 1: set_le(i, j); break;
                case 2: set_le(j, i); break;
                default: break;
            }
            c /= 3;
        }
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y = 0; y < n && transitive; ++y)
                for (int z = 0; z < n; ++z)
                    if (ord.le(x, y) && ord.le(y, z) && !ord.le(x, z)) {
                        transitive = false;
                        break;
                    }
        if (!transitive) continue;

        ord.meet = OpTable(n);
        ord.join = OpTable(n);
        bool lattice = true;
        for (int x = 0; x < n && lattice; ++x)
            for (int y = 0; y < n && lattice; ++y) {
                int glb = -1, lub = -1;
                for (int z = 0; z < n; ++z) {
                    if (ord.le(z, x) && ord.le(z, y)) {
                        bool greatest = true;
                        for (int w = 0; w < n && greatest; ++w)
                            if (ord.le(w, x) && ord.le(w, y) && !ord.le(w, z))
                                greatest = false;
                        if (greatest) glb = z;
                    }
                    if (ord.le(x, z) && ord.le(y, z)) {
                        bool least = true;
                        for (int w = 0; w < n && least; ++w)
                            if (ord.le(x, w) && ord.le(y, w) && !ord.le(z, w))
                                least = false;
                        if (least) lub = z;
                    }
                }
                if (glb < 0 || lub < 0) {
                    lattice = false;
                    break;
                }
                ord.meet.at(x, y) = glb;
                ord.join.at(x, y) = lub;
            }
        if (lattice) out.push_back(std::move(ord));
    }
    return out;
}

// Depth-first fill of the free tensor cells (middle upper triangle); the
// bottom row is zero and the top row is the identity. Values are pruned to
// the downset of the meet and to pairwise monotonicity, both consequences of
// residuation; derive_residuum re-verifies everything at the leaf.
void enumerate_tensors(const Order& ord, const std::vector<std::string>& names,
                       const std::function<void(const GeneratedLattice&)>& emit) {
    const int n = ord.n;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) cells.emplace_back(i, j);

    OpTable t(n, -1);
    for (int x = 0; x < n; ++x) {
        t.at(0, x) = 0;
        t.at(x, 0) = 0;
        t.at(n - 1, x) = x;
        t.at(x, n - 1) = x;
    }

    auto monotone_with = [&](int i, int j, Element v) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                Element u = t(p, q);
                if (u < 0) continue;
                if (ord.le(p, i) && ord.le(q, j) && !ord.le(u, v)) return false;
                if (ord.le(i, p) && ord.le(j, q) && !ord.le(v, u)) return false;
            }
        return true;
    };

    auto leaf = [&]() {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (t(t(x, y), z) != t(x, t(y, z))) return;
        RawTables raw;
        raw.names = names;
        raw.meet = ord.meet;
        raw.join = ord.join;
        raw.tensor = t;
        try {
            raw.residuum = derive_residuum(raw);
        } catch (const NotResiduated&) {
            return;
        }
        ValidationReport report = validate(raw);
        if (!report.passed) return;
        ResiduatedLattice L = ResiduatedLattice::from_tables(std::move(raw));
        emit(GeneratedLattice{L, canonical_hash(L)});
    };

    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            leaf();
            return;
        }
        auto [i, j] = cells[k];
        for (Element v = 0; v < n; ++v) {
            if (!ord.le(v, ord.meet(i, j))) continue;
            if (!monotone_with(i, j, v)) continue;
            t.at(i, j) = v;
            t.at(j, i) = v;
            self(self, k + 1);
            t.at(i, j) = -1;
            t.at(j, i) = -1;
        }
    };
    dfs(dfs, 0);
}

std::string encode_relabeled(const ResiduatedLattice& L, const std::vector<int>& perm) {
    const int n = L.size();
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(4) * n * n + 1);
    bytes.push_back(static_cast<char>(n));
    const OpTable* tables[4] = {&L.meet_table(), &L.join_table(), &L.tensor_table(),
                                &L.residuum_table()};
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (const OpTable* t : tables)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                bytes.push_back(static_cast<char>(perm[(*t)(inv[x], inv[y])]));
    return bytes;
}

}  // namespace

std::string canonical_hash(const ResiduatedLattice& L) {
    const int n = L.size();
    std::vector<int> middles;
    for (int i = 1; i < n - 1; ++i) middles.push_back(i);

    std::string best;
    std::vector<int> perm(n);
    do {
        perm[0] = 0;
        perm[n - 1] = n - 1;
        for (int i = 1; i < n - 1; ++i) perm[i] = middles[i - 1];
        std::string enc = encode_relabeled(L, perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(middles.begin(), middles.end()));

    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : best) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void enumerate_lattices(int n, const std::function<void(const GeneratedLattice&)>& emit) {
    if (n < 2) throw MalformedTables("carrier size must be at least 2");
    const std::vector<std::string> names = carrier_names(n);
    for (const Order& ord : lattice_orders(n)) enumerate_tensors(ord, names, emit);
}

std::vector<GeneratedLattice> all_lattices(int n) {
    std::vector<GeneratedLattice> out;
    enumerate_lattices(n, [&](const GeneratedLattice& g) { out.push_back(g); });
    return out;
}

SurveyRow survey_one(const ResiduatedLattice& L, const std::string& id,
                     std::uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    SurveyRow row;
    row.id = id;
    row.n = L.size();

    SheafSpace sheaf = build_sheaf(L);
    row.filter_count = static_cast<int>(sheaf.filters.size());
    row.prime_count = sheaf.prime_count();
    for (const QuotientAlgebra& stalk : sheaf.stalks) {
        row.o_sizes.push_back(stalk.filter.elements.count());
        row.stalk_sizes.push_back(stalk.class_count());
    }
    RepresentationReport rep = represent(sheaf, budget);
    if (!rep.injective) throw InternalError("survey: representation not injective");
    row.gamma_size = rep.gamma_size;
    row.surjective = rep.surjective;
    row.section_product = rep.section_product;

    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return row;
}

std::vector<SurveyRow> survey(int n, std::uint64_t budget, int jobs) {
    std::vector<GeneratedLattice> lattices = all_lattices(n);
    std::vector<SurveyRow> rows(lattices.size());

    jobs = std::max(1, jobs);
    if (jobs == 1 || lattices.size() < 2) {
        for (std::size_t i = 0; i < lattices.size(); ++i)
            rows[i] = survey_one(lattices[i].lattice, lattices[i].id, budget);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::exception_ptr> errors(lattices.size());
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lattices.size() || failed.load()) break;
            try {
                rows[i] = survey_one(lattices[i].lattice, lattices[i].id, budget);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

}  // namespace reslat
