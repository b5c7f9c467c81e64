#include "lcs/io.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>
#include <memory>
#include <numeric>

#include "json.hpp"
#include "lcs/error.hpp"

namespace lcs::io {

namespace {

using nlohmann::json;

template <typename U>
void put_le(std::vector<std::uint8_t>& out, U bits) {
  for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
}

template <typename U>
U get_le(const std::uint8_t* p) {
  U v = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) v |= static_cast<U>(p[b]) << (8 * b);
  return v;
}

[[noreturn]] void parse_error(const std::string& origin, std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::Parse, origin + " at byte " + std::to_string(offset) + ": " + what);
}

std::size_t checked_product(const std::vector<std::size_t>& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

std::vector<std::uint8_t> encode_signal(std::span<const Complex> data,
                                        const std::vector<std::size_t>& shape, Dtype dtype) {
  if (checked_product(shape) != data.size()) {
    throw Error(ErrorCode::InvalidShape, "signal shape does not match data length");
  }
  const json header = {{"dtype", dtype == Dtype::c64 ? "c64" : "c128"},
                       {"shape", shape},
                       {"order", "row-major"},
                       {"endian", "little"}};
  const std::string text = header.dump();
  std::vector<std::uint8_t> out(kSignalMagic.begin(), kSignalMagic.end());
  put_le(out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  const std::size_t width = dtype == Dtype::c64 ? 8 : 16;
  out.reserve(out.size() + data.size() * width);
  for (const auto& z : data) {
    if (dtype == Dtype::c64) {
      put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(z.real())));
      put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(z.imag())));
    } else {
      put_le(out, std::bit_cast<std::uint64_t>(z.real()));
      put_le(out, std::bit_cast<std::uint64_t>(z.imag()));
    }
  }
  return out;
}

SignalFile decode_signal(std::span<const std::uint8_t> bytes, const std::string& origin) {
  constexpr std::size_t kPrefix = 12;
  if (bytes.size() < kPrefix) parse_error(origin, bytes.size(), "truncated signal header");
  if (std::memcmp(bytes.data(), kSignalMagic.data(), kSignalMagic.size()) != 0) {
    parse_error(origin, 0, "bad magic, expected CSIGNAL1");
  }
  const std::uint32_t header_len = get_le<std::uint32_t>(bytes.data() + 8);
  if (bytes.size() - kPrefix < header_len) {
    parse_error(origin, kPrefix, "header length " + std::to_string(header_len) + " runs past end of file");
  }
  json header;
  try {
    header = json::parse(bytes.begin() + kPrefix, bytes.begin() + kPrefix + header_len);
  } catch (const json::exception& e) {
    parse_error(origin, kPrefix, std::string("malformed JSON header: ") + e.what());
  }

  SignalFile out;
  try {
    const std::string dtype = header.at("dtype").get<std::string>();
    if (dtype == "c64") out.dtype = Dtype::c64;
    else if (dtype == "c128") out.dtype = Dtype::c128;
    else parse_error(origin, kPrefix, "unsupported dtype '" + dtype + "'");
    if (header.at("order").get<std::string>() != "row-major") {
      parse_error(origin, kPrefix, "only row-major order is supported");
    }
    if (header.at("endian").get<std::string>() != "little") {
      parse_error(origin, kPrefix, "only little-endian payloads are supported");
    }
    out.shape = header.at("shape").get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    parse_error(origin, kPrefix, std::string("invalid header field: ") + e.what());
  }
  if (out.shape.empty()) parse_error(origin, kPrefix, "empty shape");

  const std::size_t count = checked_product(out.shape);
  const std::size_t width = out.dtype == Dtype::c64 ? 8 : 16;
  const std::size_t payload = kPrefix + header_len;
  if (bytes.size() - payload != count * width) {
    parse_error(origin, payload, "payload holds " + std::to_string(bytes.size() - payload) +
                                     " bytes, shape requires " + std::to_string(count * width));
  }
  out.data.resize(count);
  const std::uint8_t* p = bytes.data() + payload;
  for (std::size_t i = 0; i < count; ++i, p += width) {
    if (out.dtype == Dtype::c64) {
      out.data[i] = {std::bit_cast<float>(get_le<std::uint32_t>(p)),
                     std::bit_cast<float>(get_le<std::uint32_t>(p + 4))};
    } else {
      out.data[i] = {std::bit_cast<double>(get_le<std::uint64_t>(p)),
                     std::bit_cast<double>(get_le<std::uint64_t>(p + 8))};
    }
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::Io, "read failure on '" + path.string() + "'");
  return bytes;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failure on '" + path.string() + "'");
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  write_bytes(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

void write_signal_file(const std::filesystem::path& path, std::span<const Complex> data,
                       const std::vector<std::size_t>& shape, Dtype dtype) {
  write_bytes(path, encode_signal(data, shape, dtype));
}

SignalFile read_signal_file(const std::filesystem::path& path) {
  return decode_signal(read_bytes(path), path.string());
}

std::string encode_mask(const SubsamplingPattern& pattern) {
  const json doc = {{"p", pattern.universe()}, {"dims", pattern.dims()}, {"indices", pattern.indices()}};
  return doc.dump() + "\n";
}

SubsamplingPattern decode_mask(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(origin, e.byte, std::string("malformed mask JSON: ") + e.what());
  }
  std::size_t p = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> indices;
  try {
    p = doc.at("p").get<std::size_t>();
    if (doc.contains("dims")) dims = doc.at("dims").get<std::vector<std::size_t>>();
    indices = doc.at("indices").get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    parse_error(origin, 0, std::string("invalid mask field: ") + e.what());
  }
  if (!std::is_sorted(indices.begin(), indices.end())) parse_error(origin, 0, "mask indices are not sorted");
  try {
    return {p, std::move(indices), std::move(dims)};
  } catch (const Error& e) {
    parse_error(origin, 0, e.what());
  }
}

void write_mask_file(const std::filesystem::path& path, const SubsamplingPattern& pattern) {
  write_text(path, encode_mask(pattern));
}

SubsamplingPattern read_mask_file(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  return decode_mask({reinterpret_cast<const char*>(bytes.data()), bytes.size()}, path.string());
}

KSpaceVolume read_volume_file(const std::filesystem::path& path) {
  SignalFile file = read_signal_file(path);
  if (file.shape.size() != 3) {
    throw Error(ErrorCode::Parse, path.string() + ": volume files need a 3D shape");
  }
  KSpaceVolume vol;
  vol.dims = {file.shape[0], file.shape[1], file.shape[2]};
  vol.data = std::move(file.data);
  vol.source = path.stem().string();
  return vol;
}

void write_volume_file(const std::filesystem::path& path, const KSpaceVolume& vol, Dtype dtype) {
  write_signal_file(path, vol.data, {vol.dims[0], vol.dims[1], vol.dims[2]}, dtype);
}

void write_ensemble(const std::filesystem::path& path, const DiscreteEnsemble& ens) {
  validate(ens);
  std::vector<Complex> flat;
  flat.reserve(ens.atoms.size() * ens.dimension());
  for (const auto& a : ens.atoms) flat.insert(flat.end(), a.begin(), a.end());
  std::vector<std::size_t> shape{ens.atoms.size()};
  if (ens.dims.empty()) shape.push_back(ens.dimension());
  else shape.insert(shape.end(), ens.dims.begin(), ens.dims.end());
  write_signal_file(path, flat, shape);
  const json sidecar = {{"dims", ens.dims}, {"probs", ens.probs}, {"seed", ens.seed}};
  write_text(path.string() + ".probs.json", sidecar.dump() + "\n");
}

DiscreteEnsemble read_ensemble(const std::filesystem::path& path) {
  SignalFile file = read_signal_file(path);
  if (file.shape.size() < 2) throw Error(ErrorCode::Parse, path.string() + ": ensemble needs [K, dims...]");
  const std::string sidecar_path = path.string() + ".probs.json";
  const auto bytes = read_bytes(sidecar_path);
  DiscreteEnsemble ens;
  try {
    const json doc = json::parse(bytes.begin(), bytes.end());
    ens.dims = doc.at("dims").get<std::vector<std::size_t>>();
    ens.probs = doc.at("probs").get<std::vector<double>>();
    ens.seed = doc.value("seed", std::uint64_t{0});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, sidecar_path + ": " + e.what());
  }
  const std::size_t k = file.shape[0];
  const std::size_t p = file.data.size() / k;
  for (std::size_t i = 0; i < k; ++i) {
    ens.atoms.emplace_back(file.data.begin() + static_cast<std::ptrdiff_t>(i * p),
                           file.data.begin() + static_cast<std::ptrdiff_t>((i + 1) * p));
  }
  validate(ens);
  return ens;
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Io, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_bytes(path)); }

}  // namespace lcs::io
