#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace gwc {

inline constexpr std::string_view kVersionString = "0.1.0";

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// 64-bit FNV-1a, hex-formatted; stable across platforms.
std::string content_hash(std::string_view text);

/// "# gw-commute <version> <hash>"
std::string csv_footer(std::string_view config_hash);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace gwc
