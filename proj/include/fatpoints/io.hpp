#pragma once

#include <string>

#include "json.hpp"

#include "fatpoints/border.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Scheme file format: {"mult": [[...]], "row_coords": [[a0,a1],...],
// "col_coords": [[b0,b1],...], "labels": ...}.  mult is required and must
// be rectangular with non-negative integer entries; the coordinate lists
// are optional but come as a pair; labels are tolerated and ignored.
GridScheme parse_scheme_json(const nlohmann::json& j);
GridScheme load_scheme(const std::string& path);  // parse + validate

nlohmann::json scheme_to_json(const GridScheme& s);

// Lossless table serialization; kUnknown maps to null.
nlohmann::json table_to_json(const HilbertTable& t);
HilbertTable table_from_json(const nlohmann::json& j);

// Right-aligned grid, '?' for unknown entries.
std::string render_table_pretty(const HilbertTable& t);

}  // namespace fatpoints
