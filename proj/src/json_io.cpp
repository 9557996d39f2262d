#include "asmxray/json_io.hpp"

namespace asmxray {

using nlohmann::json;

json to_json(const IntMatrix& m) { return json{{"n", m.size()}, {"entries", m.rows()}}; }

json to_json(const Asm& a) { return to_json(a.matrix()); }

json to_json(const DyckPath& p) { return render_dyck_path(p); }

json to_json(const XRayHistogram& h) {
  json counts = json::object();
  for (const auto& [key, value] : h.counts) counts[key] = value;
  return counts;
}

json to_json(const EnumerationReport& r) {
  return json{{"n", r.n},
              {"asm_count", r.asm_count},
              {"dsasm_count", r.dsasm_count},
              {"dyck_count", r.dyck_count},
              {"determined_count", r.determined_count},
              {"histogram", to_json(r.histogram)}};
}

Asm asm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw Error(ErrorCode::ParseError, "expected an object with an \"entries\" array");
  std::vector<std::vector<int>> entries;
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
    auto& out = entries.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "matrix entries must be integers");
      out.push_back(v.get<int>());
    }
  }
  int n = static_cast<int>(entries.size());
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
    n = j["n"].get<int>();
  }
  return validate_asm(n, entries);
}

Asm parse_asm_json(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "invalid JSON");
  return asm_from_json(j);
}

std::string dump_line(const json& j) { return j.dump(); }

}  // namespace asmxray
