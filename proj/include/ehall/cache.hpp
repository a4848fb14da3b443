#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ehall {

/// Content-addressed result store: one JSON file per entry, named by the
/// SHA-256 of (convention version, operation tag, canonical parameters).
class Cache {
public:
    explicit Cache(std::filesystem::path dir, std::string version);
    /// Directory from EHALL_CACHE_DIR (default ./.ehall-cache), current convention version.
    static Cache from_env();

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] std::string key(const std::string& op, const std::string& params) const;

    /// Stored value text, or nothing. Corrupt or foreign entries are skipped
    /// with a warning on warn.
    std::optional<std::string> get(const std::string& key, std::ostream* warn = nullptr) const;
    /// Writes through a temporary file and rename, so readers never see a partial entry.
    void put(const std::string& key, const std::string& value, double millis = 0) const;

    struct Stats {
        std::size_t entries = 0;
        std::uintmax_t bytes = 0;
    };
    [[nodiscard]] Stats stats() const;
    /// Removes every entry; returns how many were removed.
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
    std::string version_;
};

std::string sha256_hex(const std::string& data);

} // namespace ehall
