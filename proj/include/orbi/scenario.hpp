#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbi/gspace.hpp"

namespace orbi {

using Json = nlohmann::ordered_json;

/// A parsed scenario file (schema_version 1).
struct Scenario {
  std::string name;
  GSpace space;
  /// torsion classes requested by the file: nullopt = not given,
  /// empty vector with torsion_all = "all"
  std::optional<std::vector<std::vector<int>>> torsion;
  bool torsion_all = false;
  /// canonical document (fixed key order) and its SHA-256
  Json document;
  std::string digest;
};

/// Parses and validates a document. Errors: SyntaxError (with line and
/// column), SchemaError (with a JSON path), SemanticError (a group or space
/// constructor rejected the data; the underlying code is kept in the
/// message).
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical document, reparseable into an equivalent scenario.
Json render_scenario(const Scenario& s);

/// Group from a command-line spec such as "abelian:[2,2]".
FiniteGroup parse_group_spec(const std::string& spec);

std::string sha256_hex(const std::string& data);

}  // namespace orbi
