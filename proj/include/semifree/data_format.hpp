// JSON file format for fixed-point data and Fano tables.
//
//   {"name": "...", "dimension": 8, "b2": 1, "components": [
//     {"type": "cp1", "weights": [-1, 0, 1, 1],
//      "normal": {"kind": "surface", "summands": [{"degree": 3, "weight": -1}, ...]}}]}
//
// Normal kinds: point; surface (three summands); fourdim_extremal (c1, c2);
// fourdim_split (negative, positive, two coordinates each); sixdim (c1).
#pragma once

#include "semifree/fano.hpp"
#include "semifree/types.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace semifree {

/// Syntax errors carry "line L, column C"; schema errors the offending field path.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json data_to_json(const FixedPointData& data);
FixedPointData data_from_json(const Json& j);
/// Pretty JSON with a trailing newline.
std::string emit_data(const FixedPointData& data);
FixedPointData parse_data(const std::string& text);
/// Also throws ParseError when the file cannot be read.
FixedPointData load_data(const std::string& path);

Json fano_table_to_json(const std::vector<FanoFamilyRecord>& records);
std::vector<FanoFamilyRecord> fano_table_from_json(const Json& j);
std::string emit_fano_table(const std::vector<FanoFamilyRecord>& records);
std::vector<FanoFamilyRecord> parse_fano_table(const std::string& text);
std::vector<FanoFamilyRecord> load_fano_table(const std::string& path);

/// FNV-1a (64 bit, hex) of the compact canonical JSON of a table.
std::string table_hash(const std::vector<FanoFamilyRecord>& records);

}  // namespace semifree
