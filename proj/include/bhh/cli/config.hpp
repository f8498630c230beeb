#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhh/braidalg/algebra.hpp"

namespace bhh {

/// Malformed or inconsistent job configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A job: a Hopf algebra E (a group or explicit structure constants), an
/// E-module algebra A, and the caps and task selection for B = A * E.
struct JobConfig {
  std::string name;
  std::string description;
  FieldSpec field;
  std::optional<GroupTable> group;  // set when E = kG
  FinHopf E;
  ModuleAlgebra A;
  std::optional<std::vector<std::vector<Scalar>>> twist;  // alpha(g,h), needs a group
  std::size_t max_degree = 4;
  std::size_t max_columns = 10000;
  unsigned long seed = 1;
  std::vector<std::string> suites;     // empty: all applicable
  std::vector<std::string> complexes;  // for compute; empty: the defaults
};

/// Suites run by `verify`, in order.
const std::vector<std::string>& suite_names();
/// Complexes known to `compute`.
const std::vector<std::string>& complex_names();

/// Parses and validates a configuration document; throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);
/// Canonical form: every field spelled out, structure constants as sorted
/// sparse triplets [i, j, (k,) numerator, denominator].
nlohmann::json config_to_json(const JobConfig& c);
/// Indented JSON with arrays of scalars kept on one line.
std::string pretty_json(const nlohmann::json& j, int indent = 0);
/// FNV-1a 64 as 16 hex digits.
std::string fnv1a_hex(const std::string& data);
/// fnv1a_hex of the compact dump of the canonical form.
std::string config_hash(const JobConfig& c);

struct CatalogEntry {
  std::string name;
  std::string summary;
};
const std::vector<CatalogEntry>& example_catalog();
/// The catalog entry as a configuration document; throws ConfigError for
/// unknown names.
nlohmann::json example_config(const std::string& name);

}  // namespace bhh
