#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "logcave/concavity.hpp"

namespace logcave {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

struct RunManifest {
  std::vector<std::string> command_line;
  Json params = Json::object();
  std::string version = kVersion;
  double wall_time_ms = 0;
  int jobs = 1;
  std::string output_digest;
};

Json to_json(const Violation& v);
/// {scan, checked, violations, params}; big integers as decimal strings.
Json to_json(const ConcavityReport& r);
Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

/// The document with its run-dependent parts (runtime_ms, manifest) removed, dumped with
/// two-space indentation. Reports of the same computation agree on this text byte for byte.
std::string canonical_text(const Json& document);
/// 16 hex digits of FNV-1a over canonical_text.
std::string report_digest(const Json& document);

/// Fills in the digest and stores the manifest under "manifest".
void attach_manifest(Json& document, RunManifest manifest);

/// One header line and one row per violation kind (or a single row with count 0).
std::string csv_summary(const Json& document);

/// `path` gets the JSON; the CSV summary goes next to it with extension ".csv".
void write_report(const std::filesystem::path& path, const Json& document);

Json read_report(const std::filesystem::path& path);

}  // namespace logcave
