#pragma once

#include <string>
#include <string_view>

#include "ultraseq/seqcore.hpp"

namespace ultraseq {

/// {"lo": int, "values": [decimal strings],
///  "left": {"kind": "periodic"|"undefined", "unit": [decimal strings]}, "right": {...}}
std::string to_json(const SeqWindow& w);

/// Throws std::invalid_argument on malformed documents.
SeqWindow from_json(std::string_view text);

/// "index,value" header, then one row per materialized position, LF endings.
std::string to_csv(const SeqWindow& w);

/// Reads consecutive index,value rows; both sides of the result are undefined.
/// Throws std::invalid_argument on malformed input or gaps in the indices.
SeqWindow from_csv(std::string_view text);

/// Two right-aligned columns for terminals.
std::string to_table(const SeqWindow& w);

}  // namespace ultraseq
