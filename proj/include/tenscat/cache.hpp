#pragma once

#include <string>

namespace tenscat {

inline constexpr int kLrCacheFormatVersion = 1;

// Seed the LR memo table from a cache file. A missing, stale, or corrupt
// file is ignored after emitting a warning through `warn`; results never
// depend on whether a cache was present. Returns the number of records
// loaded.
std::size_t load_lr_cache(const std::string& path, std::string* warn);

// Persist the current LR memo table to `path` in deterministic order.
// Returns false (with a warning) when the file cannot be written.
bool store_lr_cache(const std::string& path, std::string* warn);

}  // namespace tenscat
