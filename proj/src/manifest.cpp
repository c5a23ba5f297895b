#include "hil/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>

#include "hil/config.hpp"
#include "json.hpp"

namespace hil {

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read artifact for digest: " + path.string());

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: init failed");

    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        const std::streamsize got = in.gcount();
        if (got > 0 &&
            EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(got)) != 1)
            throw std::runtime_error("sha256: update failed");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("sha256: final failed");

    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char b[3];
        std::snprintf(b, sizeof(b), "%02x", digest[i]);
        hex += b;
    }
    return hex;
}

void write_manifest(const std::filesystem::path& manifest_path,
                    const std::string& command, const std::string& config_echo,
                    const std::vector<std::filesystem::path>& artifacts) {
    nlohmann::json j;
    j["tool"] = "hil";
    j["version"] = kToolVersion;
    j["command"] = command;

    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char ts[32];
    std::tm tm_utc{};
    gmtime_r(&tt, &tm_utc);
    std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    j["timestamp"] = ts;

    j["config"] = config_echo;
    auto files = nlohmann::json::array();
    for (const auto& a : artifacts)
        files.push_back({{"file", a.filename().string()}, {"sha256", sha256_file(a)}});
    j["artifacts"] = files;

    std::ofstream out(manifest_path, std::ios::binary);
    if (!out) throw IoError("cannot write manifest: " + manifest_path.string());
    out << j.dump(2) << '\n';
}

}  // namespace hil
