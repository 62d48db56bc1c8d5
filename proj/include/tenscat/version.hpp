#pragma once

namespace tenscat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tenscat
