#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hodgkin/cartan.hpp"
#include "hodgkin/flagk.hpp"

namespace hodgkin::cache {

inline constexpr int kCacheFormatVersion = 1;

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

/// Cache directory: the flag if non-empty, then $HODGKIN_CACHE_DIR, then
/// $XDG_CACHE_HOME/hodgkin, then $HOME/.cache/hodgkin. Empty if none applies.
std::string resolve_dir(const std::string& flag);

/// Human-readable list of the resolution steps above.
std::vector<std::string> resolution_order();

/// Serialized cache entry: type, Weyl matrices, longest word, module data and
/// a checksum over everything else.
std::string serialize(const cartan::CartanType& type, const cartan::WeylGroup& weyl, const flagk::ModuleData& data);

/// Parses and validates an entry against the expected type and Weyl group.
/// Returns nullopt (with a reason) on any mismatch, including a bad checksum
/// or a different format version.
std::optional<flagk::ModuleData> parse(const std::string& text, const cartan::CartanType& type,
                                       const cartan::WeylGroup& weyl, std::string* reason = nullptr);

/// <dir>/<type>.json
std::string entry_path(const std::string& dir, const cartan::CartanType& type);

std::optional<flagk::ModuleData> load(const std::string& dir, const cartan::CartanType& type,
                                      const cartan::WeylGroup& weyl, std::string* reason = nullptr);

/// Writes atomically (temporary file, then rename). Returns false on I/O failure.
bool store(const std::string& dir, const cartan::CartanType& type, const cartan::WeylGroup& weyl,
           const flagk::ModuleData& data);

}  // namespace hodgkin::cache
