#include "file_cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace orbithodge::cli {

FileGroebnerMemo::FileGroebnerMemo(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw UsageError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path FileGroebnerMemo::path_for(const std::string& key) const { return dir_ / ("gb-" + key + ".json"); }

std::optional<std::string> FileGroebnerMemo::load(const std::string& key) {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void FileGroebnerMemo::store(const std::string& key, const std::string& document) {
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best effort
    out << document;
    if (!out.flush()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace orbithodge::cli
