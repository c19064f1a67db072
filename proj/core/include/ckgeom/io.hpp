#pragma once

#include "ckgeom/constructions.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace ckgeom {

using Json = nlohmann::json;

// Jets serialize as {"n", "D", "valid_order", "coeffs": {"e1 e2 ..": "p/q"}}
// with zero coefficients omitted; slices add "slice_of": n. Tables are keyed
// 1-based: "i,j" for bilinear forms, "k;i,j" for connections. Every reader
// throws FormatError on malformed input.

Json to_json(const Jet& jet);
Jet jet_from_json(const Json& j);

Json to_json(const SliceJet& slice);
SliceJet slice_from_json(const Json& j);

Json to_json(const Bilinear& b);
Bilinear bilinear_from_json(const Json& j);

Json to_json(const Connection& c);
Connection connection_from_json(const Json& j);

Json to_json(const FreeData& fd);
FreeData free_data_from_json(const Json& j);

Json to_json(const BuildReport& report);
BuildReport report_from_json(const Json& j);

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace ckgeom
