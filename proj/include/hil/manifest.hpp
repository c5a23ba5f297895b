#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hil {

inline constexpr const char* kToolVersion = "0.1.0";

/// Hex SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

/// Reproducibility record: resolved config echo, tool version, timestamp,
/// and a digest per emitted artifact.
void write_manifest(const std::filesystem::path& manifest_path,
                    const std::string& command, const std::string& config_echo,
                    const std::vector<std::filesystem::path>& artifacts);

}  // namespace hil
