#include "lcs/manifest.hpp"

#include "json.hpp"
#include "lcs/error.hpp"
#include "lcs/io.hpp"

namespace lcs {

std::string encode_manifest(const Manifest& manifest) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : manifest.entries) {
    entries.push_back({{"file", e.file},
                       {"patient", e.patient},
                       {"z", e.z},
                       {"role", std::string(to_string(e.role))},
                       {"sha256", e.sha256}});
  }
  const nlohmann::json doc = {{"rows", manifest.rows},
                              {"cols", manifest.cols},
                              {"tau", manifest.tau},
                              {"train_patients", manifest.train_patients},
                              {"patients", manifest.patients},
                              {"slices", entries}};
  return doc.dump(2) + "\n";
}

Manifest decode_manifest(const std::string& text, const std::string& origin) {
  Manifest m;
  try {
    const auto doc = nlohmann::json::parse(text);
    m.rows = doc.at("rows").get<std::size_t>();
    m.cols = doc.at("cols").get<std::size_t>();
    m.tau = doc.at("tau").get<double>();
    m.train_patients = doc.at("train_patients").get<std::size_t>();
    m.patients = doc.at("patients").get<std::vector<std::string>>();
    for (const auto& e : doc.at("slices")) {
      m.entries.push_back({e.at("file").get<std::string>(), e.at("patient").get<std::string>(),
                           e.at("z").get<std::size_t>(), parse_slice_role(e.at("role").get<std::string>()),
                           e.value("sha256", std::string())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, origin + ": invalid manifest: " + e.what());
  }
  return m;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  io::write_text(path, encode_manifest(manifest));
}

Manifest read_manifest(const std::filesystem::path& path) {
  const auto bytes = io::read_bytes(path);
  return decode_manifest(std::string(bytes.begin(), bytes.end()), path.string());
}

SliceSet load_slices(const std::filesystem::path& manifest_path, SliceRole role) {
  const Manifest m = read_manifest(manifest_path);
  SliceSet out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.role = role;
  const auto base = manifest_path.parent_path();
  for (const auto& e : m.entries) {
    if (e.role != role) continue;
    io::SignalFile f = io::read_signal_file(base / e.file);
    if (f.data.size() != m.rows * m.cols) {
      throw Error(ErrorCode::Parse, (base / e.file).string() + ": slice shape does not match manifest");
    }
    out.slices.push_back({std::move(f.data), e.patient, e.z});
  }
  if (out.slices.empty()) {
    throw Error(ErrorCode::EmptyInput, manifest_path.string() + " lists no " +
                                           std::string(to_string(role)) + " slices");
  }
  return out;
}

}  // namespace lcs
