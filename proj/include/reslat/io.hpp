#pragma once

#include <string>

#include "reslat/core.hpp"
#include "reslat/quotient.hpp"

namespace reslat {

/// Parses the lattice document format: fields `elements` (names; index =
/// position), `meet`/`join`/`tensor` and optional `residuum` as n x n
/// row-major arrays of names or indices, row = left operand. Throws
/// MalformedTables for anything structurally wrong.
RawTables parse_lattice(const std::string& text);

/// Parse, derive the residuum when absent, validate. Throws MalformedTables /
/// NotResiduated / ValidationFailed.
ResiduatedLattice load_lattice(const std::string& text);

ResiduatedLattice load_lattice_file(const std::string& path);

/// Emits the document format with name-valued tables; byte-stable.
std::string serialize_lattice(const ResiduatedLattice& L);

/// Quotients serialize as ordinary lattices; their element names are already
/// the brace-joined member names.
std::string serialize_quotient(const QuotientAlgebra& q);

std::string read_file(const std::string& path);

}  // namespace reslat
