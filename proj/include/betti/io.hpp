#pragma once

#include "betti/betti_table.hpp"
#include "betti/graphs.hpp"
#include "betti/monomial.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace betti {

// Ideal text format: first line "ring <n>" (1 <= n <= 4096) introducing
// variables x1..xn, then one monomial per line; '#' starts a comment,
// blank lines are skipped.  Generators are minimalized on load.
MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal load_ideal_file(const std::string& path);
std::string ideal_to_text(const MonomialIdeal& ideal);

// Ideal file for the polarized model.  The polarized copies are renamed to
// the canonical x1..xn' so the output parses again; comment lines record
// which copy each variable is.
std::string polarization_to_text(const MonomialIdeal& original);

// Graph text format: first line "vertices <n>", then one "u v" edge per
// line, 1-based; '#' comments and blank lines are skipped.
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string graph_to_text(const Graph& graph);

// Macaulay-style diagram: columns are homological degrees i, rows are
// j - i, entries right-aligned with '.' for zero, plus a total row.
std::string render_betti_diagram(const BettiTable& table);

// Inverse of render_betti_diagram (total row is ignored); used to check
// that diagram and JSON encode the same value map.
std::map<std::pair<int, int>, long long> parse_betti_diagram(const std::string& text);

// JSON report: {"field_char", "betti" (sorted non-zero triples), "reg",
// "projdim", "index" (number or "infinity"), "pruned_cells"}, emitted with
// two-space indent and a trailing newline; parsing and re-emitting is
// byte-identical.
std::string betti_json(const BettiTable& table, const InvariantSummary& summary);

// Facet / minimal non-face report for the complex subcommand.
std::string complex_report(const SimplicialComplex& complex);

} // namespace betti
