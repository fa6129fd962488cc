#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linassign/core.hpp"
#include "linassign/solver.hpp"

namespace linassign {

/// Parses the instance file format: one "S" line and one "T" line of
/// whitespace-separated integers; '#' lines and blank lines ignored;
/// LF or CRLF. Errors carry 1-based line numbers.
Instance parse_instance(std::string_view text);

/// Canonical serialization: "S ...\nT ...\n" with sorted coordinates.
std::string emit_instance(const Instance& inst);

/// Box notation over {'x', '.'} ('X' accepted): coordinate i for each
/// onset at zero-based position i. Throws Error(kBadSymbol).
std::vector<Coord> parse_box_notation(std::string_view pattern);

/// Directed swap distance between two rhythms: optimal assignment cost
/// of onsets(a) onto onsets(b). Asymmetric; requires at least as many
/// onsets in a as in b.
Cost rhythm_distance(std::string_view a, std::string_view b);

/// The solve subcommand's structured output, keys exactly
/// cost, edges, removed, decomposition; edges sorted by s coordinate.
std::string solution_to_json(const Instance& inst, const Solution& sol);

std::string solution_to_tsv(const Instance& inst, const Solution& sol);

}  // namespace linassign
