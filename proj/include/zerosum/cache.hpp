#pragma once

// On-disk result cache. One file per key `{kind}-{group_spec}-{schema_version}`
// holding a single newline-terminated JSON record:
//   {"schema_version":1,"group_spec":"D:8","kind":"davenport",
//    "payload":"<serialized result>","content_hash":"<sha256 hex of payload>"}
// Writes go to a temporary file that is renamed into place.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <json.hpp>

#include "zerosum/error.hpp"

namespace zerosum::cache {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "ZEROSUM_CACHE_DIR";
inline constexpr const char* kDefaultCacheDir = ".zerosum-cache";

struct CacheRecord {
  int schema_version = kCacheSchemaVersion;
  std::string group_spec;
  std::string kind;  ///< davenport, extremal or verify
  std::string payload;
  std::string content_hash;
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0F]);
  }
  return out;
}

inline CacheRecord make_record(std::string kind, std::string group_spec, std::string payload) {
  CacheRecord r;
  r.kind = std::move(kind);
  r.group_spec = std::move(group_spec);
  r.content_hash = sha256_hex(payload);
  r.payload = std::move(payload);
  return r;
}

inline std::string record_key(const std::string& kind, const std::string& group_spec, int schema_version) {
  return kind + "-" + group_spec + "-" + std::to_string(schema_version);
}

/// Default cache location: $ZEROSUM_CACHE_DIR, else ./.zerosum-cache.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return env;
  return kDefaultCacheDir;
}

class Cache {
 public:
  /// Creates the directory if needed; throws Error if that fails.
  explicit Cache(std::filesystem::path dir, std::ostream* warnings = nullptr)
      : dir_(std::move(dir)), warnings_(warnings) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) {
      throw Error("cache directory '" + dir_.string() + "' cannot be created: " + ec.message());
    }
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

  void store(const CacheRecord& record) const {
    const nlohmann::json line{{"schema_version", record.schema_version},
                              {"group_spec", record.group_spec},
                              {"kind", record.kind},
                              {"payload", record.payload},
                              {"content_hash", record.content_hash}};
    const auto final_path = dir_ / record_key(record.kind, record.group_spec, record.schema_version);
    auto tmp_path = final_path;
    tmp_path += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write cache file " + tmp_path.string());
      out << line.dump() << "\n";
      if (!out.flush()) throw Error("cannot write cache file " + tmp_path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
      std::filesystem::remove(tmp_path, ec);
      throw Error("cannot move cache file into place: " + final_path.string());
    }
  }

  /// The stored record for (kind, group_spec) at the current schema version,
  /// or nullopt when absent, unreadable or failing its hash check.
  std::optional<CacheRecord> lookup(const std::string& kind, const std::string& group_spec) const {
    const auto path = dir_ / record_key(kind, group_spec, kCacheSchemaVersion);
    if (!std::filesystem::exists(path)) return std::nullopt;
    return read(path);
  }

  /// Every valid record in the directory, in file-name order.
  std::vector<CacheRecord> all() const {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
      if (!entry.is_regular_file()) continue;
      const auto name = entry.path().filename().string();
      if (name.find(".tmp.") != std::string::npos) continue;
      paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    std::vector<CacheRecord> out;
    for (const auto& p : paths) {
      if (auto r = read(p)) out.push_back(std::move(*r));
    }
    return out;
  }

 private:
  void warn(const std::string& msg) const {
    if (warnings_ != nullptr) *warnings_ << "warning: " << msg << "\n";
  }

  std::optional<CacheRecord> read(const std::filesystem::path& path) const {
    std::ifstream in(path, std::ios::binary);
    std::string line;
    if (!in || !std::getline(in, line)) {
      warn("cache record " + path.string() + " is unreadable; recomputing");
      return std::nullopt;
    }
    CacheRecord r;
    try {
      const auto j = nlohmann::json::parse(line);
      r.schema_version = j.at("schema_version").get<int>();
      r.group_spec = j.at("group_spec").get<std::string>();
      r.kind = j.at("kind").get<std::string>();
      r.payload = j.at("payload").get<std::string>();
      r.content_hash = j.at("content_hash").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      warn("cache record " + path.string() + " is corrupt; recomputing");
      return std::nullopt;
    }
    if (r.schema_version != kCacheSchemaVersion) return std::nullopt;
    if (sha256_hex(r.payload) != r.content_hash) {
      warn("cache record " + path.string() + " fails its content hash; recomputing");
      return std::nullopt;
    }
    return r;
  }

  std::filesystem::path dir_;
  std::ostream* warnings_;
};

}  // namespace zerosum::cache
