#include "lcs/dataset.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lcs/error.hpp"
#include "lcs/transform.hpp"

namespace lcs {

namespace {

KSpaceVolume transform_z(const KSpaceVolume& vol, bool inverse) {
  validate(vol);
  const auto [nx, ny, nz] = vol.dims;
  const TransformOperator op = TransformOperator::dft1d(nz);
  KSpaceVolume out = vol;
  for (std::size_t line = 0; line < nx * ny; ++line) {
    std::span<const Complex> in(vol.data.data() + line * nz, nz);
    const std::vector<Complex> res = inverse ? op.adjoint(in) : op.forward(in);
    std::copy(res.begin(), res.end(), out.data.begin() + static_cast<std::ptrdiff_t>(line * nz));
  }
  return out;
}

}  // namespace

void validate(const KSpaceVolume& vol) {
  for (auto d : vol.dims) {
    if (d == 0) throw Error(ErrorCode::InvalidShape, "volume dimensions must be positive");
  }
  if (vol.data.size() != vol.dims[0] * vol.dims[1] * vol.dims[2]) {
    throw Error(ErrorCode::InvalidShape, "volume data length does not match its dimensions");
  }
}

std::string_view to_string(SliceRole role) noexcept {
  return role == SliceRole::train ? "train" : "test";
}

SliceRole parse_slice_role(std::string_view name) {
  if (name == "train") return SliceRole::train;
  if (name == "test") return SliceRole::test;
  throw Error(ErrorCode::Parse, "unknown slice role '" + std::string(name) + "'");
}

std::vector<Signal> SliceSet::images() const {
  std::vector<Signal> out;
  out.reserve(slices.size());
  for (const auto& s : slices) out.push_back(s.image);
  return out;
}

KSpaceVolume ifft_z(const KSpaceVolume& vol) { return transform_z(vol, true); }
KSpaceVolume fft_z(const KSpaceVolume& vol) { return transform_z(vol, false); }

std::vector<double> slice_energies(const KSpaceVolume& vol) {
  validate(vol);
  const std::size_t nz = vol.dims[2];
  std::vector<double> energy(nz, 0.0);
  for (std::size_t i = 0; i < vol.data.size(); ++i) energy[i % nz] += std::norm(vol.data[i]);
  return energy;
}

SliceSet filter_slices(const KSpaceVolume& vol, double tau, SliceRole role) {
  if (!(tau >= 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidParams, "tau must lie in [0, 1)");
  const std::vector<double> energy = slice_energies(vol);
  const double peak = *std::max_element(energy.begin(), energy.end());
  const auto [nx, ny, nz] = vol.dims;

  SliceSet out;
  out.rows = nx;
  out.cols = ny;
  out.role = role;
  const TransformOperator op = TransformOperator::dft2d(nx, ny);
  for (std::size_t z = 0; z < nz; ++z) {
    if (peak == 0.0 || energy[z] < tau * peak) continue;
    Spectrum plane(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) plane[x * ny + y] = vol.data[vol.at(x, y, z)];
    }
    out.slices.push_back({op.adjoint(plane), vol.source, z});
  }
  if (out.slices.empty()) {
    throw Error(ErrorCode::EmptyAfterFilter, "no slice of '" + vol.source + "' passed the filter");
  }
  return out;
}

SliceSet ingest_volume(const KSpaceVolume& vol, double tau, SliceRole role) {
  return filter_slices(ifft_z(vol), tau, role);
}

std::pair<SliceSet, SliceSet> split_patients(const std::vector<SliceSet>& patients,
                                             std::size_t train_patients) {
  if (patients.size() < 2) throw Error(ErrorCode::InvalidSplit, "need at least two patients");
  if (train_patients == 0 || train_patients >= patients.size()) {
    throw Error(ErrorCode::InvalidSplit, "cannot put " + std::to_string(train_patients) +
                                             " of " + std::to_string(patients.size()) +
                                             " patients in the training set");
  }
  SliceSet train;
  SliceSet test;
  train.role = SliceRole::train;
  test.role = SliceRole::test;
  train.rows = test.rows = patients.front().rows;
  train.cols = test.cols = patients.front().cols;
  std::set<std::string> train_ids;
  for (std::size_t i = 0; i < patients.size(); ++i) {
    const SliceSet& p = patients[i];
    if (p.rows != train.rows || p.cols != train.cols) {
      throw Error(ErrorCode::InvalidShape, "patients have different slice shapes");
    }
    SliceSet& target = i < train_patients ? train : test;
    for (const auto& s : p.slices) {
      if (i < train_patients) train_ids.insert(s.patient);
      else if (train_ids.count(s.patient) != 0) {
        throw Error(ErrorCode::InvalidSplit, "patient '" + s.patient + "' appears on both sides");
      }
      target.slices.push_back(s);
    }
  }
  return {std::move(train), std::move(test)};
}

}  // namespace lcs
