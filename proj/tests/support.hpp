#pragma once

// Shared test helpers: the worked-example lattices built directly from their
// tables (independent of the fixture files), and a small subprocess runner.

#include <array>
#include <cstdio>
#include <initializer_list>
#include <string>
#include <vector>

#include "reslat/core.hpp"
#include "reslat/filters.hpp"

namespace testsupport {

using namespace reslat;

template <int N>
OpTable table(const std::array<std::array<int, N>, N>& rows) {
    OpTable t(N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) t.at(x, y) = rows[x][y];
    return t;
}

// Two-element Boolean algebra.
inline RawTables l2_tables() {
    RawTables t;
    t.names = {"0", "1"};
    t.meet = table<2>({{{0, 0}, {0, 1}}});
    t.join = table<2>({{{0, 1}, {1, 1}}});
    t.tensor = t.meet;
    t.residuum = table<2>({{{1, 1}, {0, 1}}});
    return t;
}

// Three-element chain with tensor = meet.
inline RawTables l3_tables() {
    RawTables t;
    t.names = {"0", "m", "1"};
    t.meet = table<3>({{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}});
    t.join = table<3>({{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}});
    t.tensor = t.meet;
    return t;  // residuum left to derivation
}

// Four elements, 0 < a,b < 1 with a,b incomparable.
inline RawTables l4_tables() {
    RawTables t;
    t.names = {"0", "a", "b", "1"};
    t.meet = table<4>({{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}});
    t.join = table<4>({{{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}});
    t.tensor = table<4>({{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}});
    t.residuum = table<4>({{{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}}});
    return t;
}

// Five elements, 0 < a,b < c < 1 with a,b incomparable.
inline RawTables l5_tables() {
    RawTables t;
    t.names = {"0", "a", "b", "c", "1"};
    t.meet = table<5>({{{0, 0, 0, 0, 0},
                        {0, 1, 0, 1, 1},
                        {0, 0, 2, 2, 2},
                        {0, 1, 2, 3, 3},
                        {0, 1, 2, 3, 4}}});
    t.join = table<5>({{{0, 1, 2, 3, 4},
                        {1, 1, 3, 3, 4},
                        {2, 3, 2, 3, 4},
                        {3, 3, 3, 3, 4},
                        {4, 4, 4, 4, 4}}});
    t.tensor = table<5>({{{0, 0, 0, 0, 0},
                          {0, 1, 0, 1, 1},
                          {0, 0, 2, 2, 2},
                          {0, 1, 2, 3, 3},
                          {0, 1, 2, 3, 4}}});
    t.residuum = table<5>({{{4, 4, 4, 4, 4},
                            {2, 4, 2, 4, 4},
                            {1, 1, 4, 4, 4},
                            {0, 1, 2, 4, 4},
                            {0, 1, 2, 3, 4}}});
    return t;
}

inline ResiduatedLattice l2() { return ResiduatedLattice::from_tables(l2_tables()); }
inline ResiduatedLattice l3() { return ResiduatedLattice::from_tables(l3_tables()); }
inline ResiduatedLattice l4() { return ResiduatedLattice::from_tables(l4_tables()); }
inline ResiduatedLattice l5() { return ResiduatedLattice::from_tables(l5_tables()); }

inline std::vector<ResiduatedLattice> catalog() { return {l2(), l3(), l4(), l5()}; }

inline Element elem(const ResiduatedLattice& L, const std::string& name) {
    for (Element x = 0; x < L.size(); ++x)
        if (L.name(x) == name) return x;
    throw std::runtime_error("no element named " + name);
}

inline Subset set_of(const ResiduatedLattice& L, std::initializer_list<const char*> names) {
    Subset s(L.size());
    for (const char* n : names) s.set(elem(L, n));
    return s;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(RESLAT_FIXTURE_DIR) + "/" + name;
}

#ifdef RESLAT_CLI_PATH
struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RESLAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}
#endif

}  // namespace testsupport
