#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslat/core.hpp"
#include "reslat/sheaf.hpp"

namespace reslat {

/// A generated lattice tagged with its relabeling-invariant hash. The stream
/// keeps relabeled duplicates; consumers may deduplicate on the id.
struct GeneratedLattice {
    ResiduatedLattice lattice;
    std::string id;
};

/// Hash of the lexicographically least table encoding over all relabelings of
/// the middle elements (bounds stay fixed; any isomorphism fixes them anyway).
std::string canonical_hash(const ResiduatedLattice& L);

/// Streams every residuated lattice on the labeled carrier {0 < ... < 1} of
/// size n: all bounded lattice orders on the middle elements, then all
/// commutative associative tensors with identity top that admit a residuum.
/// Deterministic order.
void enumerate_lattices(int n, const std::function<void(const GeneratedLattice&)>& emit);

std::vector<GeneratedLattice> all_lattices(int n);

struct SurveyRow {
    std::string id;
    int n = 0;
    int filter_count = 0;
    int prime_count = 0;
    std::vector<int> o_sizes;
    std::vector<int> stalk_sizes;
    std::optional<std::size_t> gamma_size;
    Verdict surjective = Verdict::unknown;
    std::uint64_t section_product = 0;
    double wall_ms = 0.0;  // measured, serialized only on request
};

SurveyRow survey_one(const ResiduatedLattice& L, const std::string& id,
                     std::uint64_t budget);

/// Runs the representation over every generated lattice of size n. Rows in
/// generation order; budget overruns downgrade a row to unknown. Output is
/// independent of the job count.
std::vector<SurveyRow> survey(int n, std::uint64_t budget, int jobs = 1);

const char* verdict_name(Verdict v);

}  // namespace reslat
