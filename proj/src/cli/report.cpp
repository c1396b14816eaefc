#include "logcave/report.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace logcave {

Json to_json(const Violation& v) {
  Json values = Json::object();
  for (const auto& [k, x] : v.values) values[k] = x;
  Json j = {{"kind", v.kind}, {"instance", v.instance}, {"values", values}};
  if (v.concavity) j["p"] = v.concavity->p, j["q"] = v.concavity->q;
  return j;
}

Json to_json(const ConcavityReport& r) {
  Json params = Json::object();
  for (const auto& [k, x] : r.parameters) params[k] = x;
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"scan", r.scan}, {"checked", r.instances_checked}, {"violations", violations}, {"params", params}};
}

Json to_json(const RunManifest& m) {
  return {{"command_line", m.command_line}, {"params", m.params},          {"version", m.version},
          {"wall_time_ms", m.wall_time_ms}, {"jobs", m.jobs}, {"output_digest", m.output_digest}};
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  m.command_line = j.at("command_line").get<std::vector<std::string>>();
  m.params = j.value("params", Json::object());
  m.version = j.value("version", std::string());
  m.wall_time_ms = j.value("wall_time_ms", 0.0);
  m.jobs = j.value("jobs", 1);
  m.output_digest = j.value("output_digest", std::string());
  return m;
}

std::string canonical_text(const Json& document) {
  Json copy = document;
  copy.erase("runtime_ms");
  copy.erase("manifest");
  return copy.dump(2);
}

std::string report_digest(const Json& document) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_text(document))));
  return buffer;
}

void attach_manifest(Json& document, RunManifest manifest) {
  manifest.output_digest = report_digest(document);
  document["manifest"] = to_json(manifest);
}

std::string csv_summary(const Json& document) {
  std::ostringstream out;
  const std::string name = document.value("scan", document.value("command", std::string("report")));
  if (document.contains("violations")) {
    out << "scan,checked,kind,count\n";
    std::map<std::string, std::size_t> kinds;
    for (const auto& v : document["violations"]) ++kinds[v.at("kind").get<std::string>()];
    const auto checked = document.value("checked", std::uint64_t{0});
    if (kinds.empty()) out << name << ',' << checked << ",,0\n";
    for (const auto& [k, n] : kinds) out << name << ',' << checked << ',' << k << ',' << n << '\n';
  } else {
    out << "field,value\n";
    for (const auto& [k, v] : document.items()) {
      if (k == "manifest" || k == "runtime_ms" || v.is_structured()) continue;
      out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
  return out.str();
}

void write_report(const std::filesystem::path& path, const Json& document) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream json(path);
    if (!json) throw std::runtime_error("cannot write " + path.string());
    json << document.dump(2) << '\n';
  }
  std::filesystem::path csv = path;
  csv.replace_extension(".csv");
  std::ofstream out(csv);
  if (!out) throw std::runtime_error("cannot write " + csv.string());
  out << csv_summary(document);
}

Json read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace logcave
