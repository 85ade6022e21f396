// On-disk cache of command output.
//
// One file per key. The first line is a header
//
//   braidrep-cache <version> <fnv1a64 of payload, hex> <key>
//
// followed by the payload bytes. Files are written to a temporary name and
// renamed into place, so readers see either a complete entry or none.

#ifndef BRAIDREP_CACHE_HPP_
#define BRAIDREP_CACHE_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace braidrep {

  inline constexpr std::string_view kVersion = "0.1.0";

  [[nodiscard]] inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  [[nodiscard]] inline std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
  }

  struct CacheKey {
    std::string command;
    int         n = 0;
    int         r = 0;
    std::string variant;  // format and filters
    std::string version = std::string(kVersion);

    [[nodiscard]] std::string text() const {
      return command + "|n=" + std::to_string(n) + "|r=" + std::to_string(r) + "|" + variant
             + "|v" + version;
    }
  };

  // $BRAIDREP_CACHE_DIR, else $XDG_CACHE_HOME/braidrep, else ~/.cache/braidrep.
  [[nodiscard]] inline std::filesystem::path default_cache_dir() {
    if (char const* dir = std::getenv("BRAIDREP_CACHE_DIR"); dir != nullptr && *dir != '\0') {
      return dir;
    }
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
      return std::filesystem::path(xdg) / "braidrep";
    }
    if (char const* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
      return std::filesystem::path(home) / ".cache" / "braidrep";
    }
    return std::filesystem::temp_directory_path() / "braidrep-cache";
  }

  class ResultCache {
   public:
    using Warn = std::function<void(std::string const&)>;

    explicit ResultCache(std::filesystem::path dir, Warn warn = {})
        : dir_(std::move(dir)), warn_(std::move(warn)) {}

    [[nodiscard]] std::filesystem::path const& dir() const noexcept {
      return dir_;
    }

    [[nodiscard]] std::filesystem::path path_for(CacheKey const& key) const {
      return dir_ / (hex64(fnv1a64(key.text())) + ".cache");
    }

    // Returns the stored payload, or nothing when absent, stale or corrupt.
    [[nodiscard]] std::optional<std::string> lookup(CacheKey const& key) const {
      auto const    file = path_for(key);
      std::ifstream in(file, std::ios::binary);
      if (!in) {
        return std::nullopt;
      }
      std::string header;
      std::getline(in, header);
      std::string const payload((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
      std::istringstream fields(header);
      std::string        magic, version, checksum, stored_key;
      fields >> magic >> version >> checksum;
      std::getline(fields >> std::ws, stored_key);
      if (magic != "braidrep-cache" || stored_key != key.text()) {
        warn("corrupt cache entry " + file.string() + ", recomputing");
        return std::nullopt;
      }
      if (version != key.version) {
        return std::nullopt;
      }
      if (checksum != hex64(fnv1a64(payload))) {
        warn("checksum mismatch in " + file.string() + ", recomputing");
        return std::nullopt;
      }
      return payload;
    }

    void store(CacheKey const& key, std::string_view payload) const {
      std::filesystem::create_directories(dir_);
      auto const final_path = path_for(key);
      auto       tmp        = final_path;
      tmp += ".tmp" + std::to_string(std::random_device{}());
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << "braidrep-cache " << key.version << ' ' << hex64(fnv1a64(payload)) << ' '
            << key.text() << '\n'
            << payload;
        if (!out) {
          throw std::runtime_error("cannot write cache file " + tmp.string());
        }
      }
      std::filesystem::rename(tmp, final_path);
    }

   private:
    void warn(std::string const& msg) const {
      if (warn_) {
        warn_(msg);
      }
    }

    std::filesystem::path dir_;
    Warn                  warn_;
  };

}  // namespace braidrep

#endif  // BRAIDREP_CACHE_HPP_
