// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

enum class Format { text, json, csv, latex };

/// Parses "text", "json", "csv" or "latex"; throws std::invalid_argument.
Format parse_format(std::string_view name);

/// Note attached to every two-parameter listing.
inline constexpr std::string_view kTwoParamNote = "parameters non-negative, tuple ordered";

/// {"base":[a0,a1,a2,a3,d],"steps":[[...],...],"class":"tag"}
std::string series_to_json(const Series& s);

/// Inverse of series_to_json. Validates the base, the step shapes and the
/// degree entries; throws std::invalid_argument with a reason.
Series series_from_json(std::string_view text);

/// Weights and degree of a series as parametric expressions in x (and y),
/// e.g. "(2,2x+3,2x+3,4x+5)" and "8x+12".
std::string series_weights_expr(const Series& s);
std::string series_degree_expr(const Series& s);

std::string render(const Classification& c, Format f);

/// Classification rendering followed by the concrete members up to bound.
std::string render_with_members(const Classification& c, Format f, Int bound);

std::string quintuples_to_text(const std::vector<Quintuple>& qs);

}  // namespace delpezzo
