#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "orbithodge/ideal.hpp"

namespace orbithodge::cli {

/// One JSON file per key under a directory. Writes go to a temporary file
/// that is renamed into place, so readers never see a partial document.
class FileGroebnerMemo : public GroebnerMemo {
 public:
  explicit FileGroebnerMemo(std::filesystem::path dir);

  std::optional<std::string> load(const std::string& key) override;
  void store(const std::string& key, const std::string& document) override;
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace orbithodge::cli
