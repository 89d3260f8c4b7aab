#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "valleyforge/bigint.hpp"
#include "valleyforge/version.hpp"

namespace valleyforge {

/// Persistent map "h:k:n" -> D_n^{(h,k)} as a decimal string, stamped with
/// the tool version. Entries written by another version are ignored.
///
/// File layout: {"version": "1.0.0", "entries": {"4:3:7": "358", ...}}
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

  static std::string key(int h, int k, std::size_t n) {
    return std::to_string(h) + ":" + std::to_string(k) + ":" + std::to_string(n);
  }

  std::optional<BigCount> lookup(int h, int k, std::size_t n) const {
    auto it = entries_.find(key(h, k, n));
    if (it == entries_.end()) return std::nullopt;
    return BigCount(it->second);
  }

  void store(int h, int k, std::size_t n, const BigCount& value) {
    auto [it, inserted] = entries_.insert_or_assign(key(h, k, n), value.str());
    dirty_ = dirty_ || inserted || it->second != value.str();
  }

  std::size_t size() const noexcept { return entries_.size(); }

  /// Writes the file if anything changed. No-op for an unbacked cache.
  void save() {
    if (file_.empty() || !dirty_) return;
    nlohmann::json j;
    j["version"] = version;
    j["entries"] = nlohmann::json::object();
    for (const auto& [k, v] : entries_) j["entries"][k] = v;
    const auto tmp = file_.string() + ".tmp";
    {
      std::ofstream os(tmp, std::ios::trunc);
      if (!os) throw std::runtime_error("cannot write cache file " + tmp);
      os << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file_);
    dirty_ = false;
  }

 private:
  void load() {
    std::ifstream is(file_);
    if (!is) return;  // a missing file is an empty cache
    const auto j = nlohmann::json::parse(is, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || j.value("version", "") != version) {
      dirty_ = true;  // stale or unreadable: rewrite on next save
      return;
    }
    const auto entries = j.find("entries");
    if (entries == j.end() || !entries->is_object()) return;
    for (const auto& [k, v] : entries->items())
      if (v.is_string()) entries_[k] = v.get<std::string>();
  }

  std::filesystem::path file_;
  std::map<std::string, std::string> entries_;
  bool dirty_ = false;
};

}  // namespace valleyforge
