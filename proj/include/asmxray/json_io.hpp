#pragma once

// JSON interchange: matrices are {"n": int, "entries": [[int,...],...]},
// row 1 first. Dyck paths are JSON strings over {E,S}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "asmxray/bijection.hpp"
#include "asmxray/core.hpp"
#include "asmxray/enumerate.hpp"

namespace asmxray {

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const Asm& a);
nlohmann::json to_json(const DyckPath& p);
nlohmann::json to_json(const XRayHistogram& h);
nlohmann::json to_json(const EnumerationReport& r);

/// Throws Error(ParseError) for malformed documents and the validation
/// errors of validate_asm otherwise.
Asm asm_from_json(const nlohmann::json& j);
Asm parse_asm_json(std::string_view text);

/// Compact single-line dump.
std::string dump_line(const nlohmann::json& j);

}  // namespace asmxray
