#include "koszul/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "koszul/presentation.hpp"

namespace koszul {

PieceCache::PieceCache(std::filesystem::path root) : root_(std::move(root))
{
    std::filesystem::create_directories(root_);
}

std::filesystem::path PieceCache::default_root()
{
    if (const char* dir = std::getenv("KOSZUL_CACHE_DIR"); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "koszul";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "koszul";
    return std::filesystem::temp_directory_path() / "koszul-cache";
}

std::string PieceCache::key(std::uint64_t model_hash, const FieldSpec& field, std::size_t degree)
{
    std::ostringstream text;
    text << std::hex << model_hash << "|" << field.to_string() << "|" << std::dec << degree;
    std::ostringstream out;
    out << std::hex << fnv1a64(text.str()) << "-d" << std::dec << degree;
    return out.str();
}

std::optional<nlohmann::json> PieceCache::load(const std::string& key) const
{
    std::ifstream in(root_ / (key + ".json"));
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    try {
        auto doc = nlohmann::json::parse(in);
        ++hits_;
        return doc;
    } catch (const nlohmann::json::exception&) {
        ++misses_;
        return std::nullopt;
    }
}

void PieceCache::store(const std::string& key, const nlohmann::json& value) const
{
    const auto final_path = root_ / (key + ".json");
    const auto tmp_path = root_ / (key + ".json.tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        if (!out)
            return; // cache is best effort
        out << value.dump();
        if (!out)
            return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec)
        std::filesystem::remove(tmp_path, ec);
}

} // namespace koszul
