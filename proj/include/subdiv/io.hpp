#pragma once

#include <iosfwd>
#include <string>

#include "subdiv/coloring.hpp"
#include "subdiv/digraph.hpp"
#include "subdiv/secant.hpp"
#include "subdiv/witness.hpp"

namespace subdiv {

// Text formats, all UTF-8 with 1-based vertex ids and trailing newline.
// Writers are canonical (sorted, fixed field order) so equal values
// serialize to identical bytes. The exact grammars live in docs/FORMATS.md.

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_text(const std::string& text);
std::string serialize_digraph(const Digraph& d);

Enumeration parse_enumeration_text(const std::string& text);
std::string serialize_enumeration(const Enumeration& n);

HamiltonianWitness parse_hamiltonian_text(const std::string& text);
std::string serialize_hamiltonian(const HamiltonianWitness& w);

// Coloring lines need the palette inferred; vertex count comes from the
// caller so coverage can be validated later by is_proper.
Coloring parse_coloring_text(const std::string& text, int vertex_count);
std::string serialize_coloring(const Coloring& c);

SubdivisionWitness parse_subdivision_text(const std::string& text);
std::string serialize_subdivision(const SubdivisionWitness& w);

SecantPair parse_secant_text(const std::string& text);
std::string serialize_secant(const SecantPair& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest as fixed-width hex; used for report lines and for
// deriving seeds from inputs.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace subdiv
