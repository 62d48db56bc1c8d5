#include "tenscat/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "tenscat/io.hpp"
#include "tenscat/lrcalc.hpp"

namespace tenscat {

namespace {

constexpr const char* kFormatName = "tenscat-lr-cache";

void set_warning(std::string* warn, const std::string& msg) {
  if (warn) *warn = msg;
}

}  // namespace

std::size_t load_lr_cache(const std::string& path, std::string* warn) {
  std::ifstream in(path);
  if (!in) return 0;  // no cache file is a normal cold start

  std::vector<LrRecord> records;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object() || j.value("format", "") != kFormatName ||
        j.value("version", -1) != kLrCacheFormatVersion) {
      set_warning(warn, "cache file " + path + " has an unknown format or version; ignoring it");
      return 0;
    }
    for (const auto& rec : j.at("records")) {
      records.push_back({parse_diagram(rec.at("lam").get<std::string>()),
                         parse_diagram(rec.at("mu").get<std::string>()),
                         parse_diagram(rec.at("nu").get<std::string>()),
                         rec.at("value").get<std::int64_t>()});
      const LrRecord& r = records.back();
      if (r.value < 0) throw DomainError("negative coefficient");
      // necessary vanishing conditions; a record violating them is garbage
      if (r.value > 0 &&
          (r.lam.size() != r.mu.size() + r.nu.size() || !r.lam.contains(r.mu) ||
           !r.lam.contains(r.nu)))
        throw DomainError("coefficient record contradicts the support conditions");
    }
  } catch (const std::exception& e) {
    set_warning(warn, "cache file " + path + " is corrupt (" + e.what() + "); ignoring it");
    return 0;
  }
  lr_cache_preload(records);
  return records.size();
}

bool store_lr_cache(const std::string& path, std::string* warn) {
  nlohmann::json records = nlohmann::json::array();
  for (const LrRecord& r : lr_cache_snapshot())
    records.push_back({{"lam", format_diagram(r.lam)},
                       {"mu", format_diagram(r.mu)},
                       {"nu", format_diagram(r.nu)},
                       {"value", r.value}});
  const nlohmann::json j = {{"format", kFormatName},
                            {"version", kLrCacheFormatVersion},
                            {"records", std::move(records)}};
  std::ofstream out(path);
  if (!out) {
    set_warning(warn, "cannot write cache file " + path);
    return false;
  }
  out << j.dump(2) << "\n";
  if (!out) {
    set_warning(warn, "error while writing cache file " + path);
    return false;
  }
  return true;
}

}  // namespace tenscat
