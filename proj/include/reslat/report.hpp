#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reslat/core.hpp"
#include "reslat/explorer.hpp"
#include "reslat/sheaf.hpp"

namespace reslat {

enum class Format { text, json };

struct Rendered {
    std::string output;
    bool checks_passed = true;
};

std::string format_set(const ResiduatedLattice& L, const Subset& s);
std::string format_violation(const ResiduatedLattice* L, const Violation& v);

Rendered render_validate(const RawTables& raw, bool residuum_derived,
                         const ValidationReport& report, Format f);
Rendered render_filters(const ResiduatedLattice& L, Format f);
Rendered render_spectrum(const ResiduatedLattice& L, Format f);
Rendered render_topology(const ResiduatedLattice& L, Format f);
Rendered render_sheaf(const ResiduatedLattice& L, Format f);
Rendered render_represent(const ResiduatedLattice& L, std::uint64_t budget, Format f);
Rendered render_survey(const std::vector<SurveyRow>& rows, bool timings, Format f);

}  // namespace reslat
