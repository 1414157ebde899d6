// Machine-readable output with a stable key order.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swtqft/invariants.hpp"

namespace swtqft {

/// {"genus", "degree", "chamber", "eta_bar", "k_trail", "value", "empty",
///  "warnings"}; rationals as strings, value as a JSON integer (decimal
/// string if it exceeds 64 bits).  Two-space indent, trailing newline.
std::string emit_json(const InvariantReport& report);

/// {"genus", "degree" omitted, "chamber", "eta_bar", "d_min", "d_max",
///  "values": [[d, value], ...]}.
std::string emit_series_json(
    const CobordismWord& word_template, long long d_min, long long d_max,
    const std::vector<std::pair<long long, Integer>>& values);

}  // namespace swtqft
