#include "cli_internal.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace jl::cli {

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const Json& v, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (v.is_array() && !v.empty() &&
             std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

// Reports become a field/value/provenance table; other documents are
// flattened into path/value rows.
std::string render_table(const Json& doc) {
  std::vector<std::vector<std::string>> rows;
  if (doc.is_object() && doc.contains("fields") && doc.at("fields").is_object()) {
    std::vector<std::pair<std::string, std::string>> head;
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "fields") flatten(it.value(), it.key(), head);
    for (const auto& [k, v] : head) rows.push_back({k, v});
    rows.push_back({});
    rows.push_back({"field", "value", "provenance"});
    for (auto it = doc.at("fields").begin(); it != doc.at("fields").end(); ++it) {
      const Json& f = it.value();
      rows.push_back({it.key(), scalar_text(f.at("value")),
                      f.contains("provenance") ? scalar_text(f.at("provenance")) : ""});
    }
  } else {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(doc, "", flat);
    for (const auto& [k, v] : flat) rows.push_back({k, v});
  }
  return columns(rows);
}

}  // namespace jl::cli
