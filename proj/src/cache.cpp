#include "ehall/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "ehall/conventions.hpp"
#include "json.hpp"

namespace ehall {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

Cache::Cache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

Cache Cache::from_env()
{
    const char* env = std::getenv("EHALL_CACHE_DIR");
    return Cache(env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".ehall-cache"), conventions::cache_version);
}

std::string Cache::key(const std::string& op, const std::string& params) const
{
    return sha256_hex(version_ + '\n' + op + '\n' + params);
}

std::optional<std::string> Cache::get(const std::string& key, std::ostream* warn) const
{
    const fs::path file = dir_ / (key + ".json");
    std::ifstream in(file);
    if (!in) {
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        const auto j = nlohmann::json::parse(ss.str());
        if (j.at("key").get<std::string>() != key || j.at("version").get<std::string>() != version_) {
            throw std::runtime_error("key or version mismatch");
        }
        return j.at("value").get<std::string>();
    } catch (const std::exception& e) {
        if (warn != nullptr) {
            *warn << "warning: ignoring corrupt cache entry " << file.string() << " (" << e.what() << ")\n";
        }
        return std::nullopt;
    }
}

void Cache::put(const std::string& key, const std::string& value, double millis) const
{
    static std::atomic<unsigned> counter{0};
    fs::create_directories(dir_);
    const nlohmann::json entry{{"key", key}, {"version", version_}, {"millis", millis}, {"value", value}};
    std::ostringstream tmpname;
    tmpname << key << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
            << counter++;
    const fs::path tmp = dir_ / tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary);
        out << entry.dump();
        if (!out) {
            throw std::runtime_error("cannot write cache entry " + tmp.string());
        }
    }
    fs::rename(tmp, dir_ / (key + ".json"));
}

Cache::Stats Cache::stats() const
{
    Stats s;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) {
        return s;
    }
    for (const auto& e : fs::directory_iterator(dir_)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            ++s.entries;
            s.bytes += e.file_size();
        }
    }
    return s;
}

std::size_t Cache::clear() const
{
    std::size_t n = 0;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) {
        return 0;
    }
    for (const auto& e : fs::directory_iterator(dir_)) {
        const auto name = e.path().filename().string();
        if (e.is_regular_file() && (e.path().extension() == ".json" || name.find(".tmp.") != std::string::npos)) {
            fs::remove(e.path());
            ++n;
        }
    }
    return n;
}

} // namespace ehall
