#pragma once

namespace sepstat::config {

// Defaults for the command-line driver. SEPSTAT_MAX_N overrides the
// enumeration cap at run time.

inline constexpr int default_enumeration_cap = 10;
inline constexpr int default_n = 8;
inline constexpr int default_series_order = 12;
inline constexpr int max_series_order = 64;
inline constexpr const char* cap_environment_variable = "SEPSTAT_MAX_N";

}  // namespace sepstat::config
