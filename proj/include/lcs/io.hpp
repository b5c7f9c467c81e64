#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcs/dataset.hpp"
#include "lcs/pattern.hpp"
#include "lcs/synthetic.hpp"
#include "lcs/types.hpp"

namespace lcs::io {

// Signal file layout (all integers little-endian):
//   bytes 0..7   magic "CSIGNAL1"
//   bytes 8..11  uint32 header length L
//   next L bytes UTF-8 JSON {"dtype":"c64"|"c128","endian":"little",
//                            "order":"row-major","shape":[...]}
//   remainder    interleaved (re, im) IEEE floats, 4 bytes each for c64,
//                8 bytes each for c128
inline constexpr std::string_view kSignalMagic = "CSIGNAL1";

enum class Dtype { c64, c128 };

struct SignalFile {
  std::vector<std::size_t> shape;
  Dtype dtype = Dtype::c128;
  std::vector<Complex> data;
};

std::vector<std::uint8_t> encode_signal(std::span<const Complex> data,
                                        const std::vector<std::size_t>& shape,
                                        Dtype dtype = Dtype::c128);
// `origin` names the source in error messages, which carry byte offsets.
SignalFile decode_signal(std::span<const std::uint8_t> bytes, const std::string& origin = "<memory>");

void write_signal_file(const std::filesystem::path& path, std::span<const Complex> data,
                       const std::vector<std::size_t>& shape, Dtype dtype = Dtype::c128);
SignalFile read_signal_file(const std::filesystem::path& path);

// Mask file: UTF-8 JSON {"dims":[...],"indices":[...],"p":int}, indices sorted.
std::string encode_mask(const SubsamplingPattern& pattern);
SubsamplingPattern decode_mask(std::string_view text, const std::string& origin = "<memory>");
void write_mask_file(const std::filesystem::path& path, const SubsamplingPattern& pattern);
SubsamplingPattern read_mask_file(const std::filesystem::path& path);

// 3D k-space volumes use the signal format with shape [Nx, Ny, Nz].
KSpaceVolume read_volume_file(const std::filesystem::path& path);
void write_volume_file(const std::filesystem::path& path, const KSpaceVolume& vol,
                       Dtype dtype = Dtype::c64);

// Ensemble: atoms in one signal file with shape [K, dims...] plus a JSON
// sidecar {"dims":[...],"probs":[...],"seed":int} at <path>.probs.json.
void write_ensemble(const std::filesystem::path& path, const DiscreteEnsemble& ens);
DiscreteEnsemble read_ensemble(const std::filesystem::path& path);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text(const std::filesystem::path& path, std::string_view text);

// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace lcs::io
