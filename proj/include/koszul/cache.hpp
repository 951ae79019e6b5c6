#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "koszul/field.hpp"

namespace koszul {

/// On-disk store for graded pieces, keyed by a content hash of
/// (model, field, degree). Writes go to a temporary file that is then
/// renamed into place, so readers never observe a partial entry.
class PieceCache {
public:
    explicit PieceCache(std::filesystem::path root);

    /// $KOSZUL_CACHE_DIR, else $XDG_CACHE_HOME/koszul, else ~/.cache/koszul.
    static std::filesystem::path default_root();

    static std::string key(std::uint64_t model_hash, const FieldSpec& field, std::size_t degree);

    std::optional<nlohmann::json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& value) const;

    const std::filesystem::path& root() const { return root_; }
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::filesystem::path root_;
    mutable std::atomic<std::size_t> hits_{0};
    mutable std::atomic<std::size_t> misses_{0};
};

} // namespace koszul
