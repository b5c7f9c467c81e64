#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lcs/dataset.hpp"

namespace lcs {

struct ManifestEntry {
  std::string file;  // relative to the manifest's directory
  std::string patient;
  std::size_t z = 0;
  SliceRole role = SliceRole::train;
  std::string sha256;
};

/// Index of ingested slice images written by the ingest command.
struct Manifest {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double tau = 0.0;
  std::size_t train_patients = 0;
  std::vector<std::string> patients;  // identifier order used for the split
  std::vector<ManifestEntry> entries;
};

std::string encode_manifest(const Manifest& manifest);
Manifest decode_manifest(const std::string& text, const std::string& origin = "<memory>");
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest read_manifest(const std::filesystem::path& path);

// Loads the slice images of one role; EmptyInput if there are none.
SliceSet load_slices(const std::filesystem::path& manifest_path, SliceRole role);

}  // namespace lcs
