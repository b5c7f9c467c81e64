#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcs/types.hpp"

namespace lcs {

/// Raw 3D k-space, row-major over (x, y, z) so z is the fastest axis.
struct KSpaceVolume {
  std::vector<Complex> data;
  std::array<std::size_t, 3> dims{0, 0, 0};
  std::string source;

  std::size_t at(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    return (x * dims[1] + y) * dims[2] + z;
  }
};

void validate(const KSpaceVolume& vol);

enum class SliceRole { train, test };

std::string_view to_string(SliceRole role) noexcept;
SliceRole parse_slice_role(std::string_view name);

struct Slice {
  // Image-domain ground truth, rows x cols row-major.
  Signal image;
  std::string patient;
  std::size_t z = 0;
};

struct SliceSet {
  std::size_t rows = 0;
  std::size_t cols = 0;
  SliceRole role = SliceRole::train;
  std::vector<Slice> slices;

  std::vector<Signal> images() const;
};

// Unitary inverse DFT along z for every (x, y) line.
KSpaceVolume ifft_z(const KSpaceVolume& vol);
// Unitary forward DFT along z; inverse of ifft_z.
KSpaceVolume fft_z(const KSpaceVolume& vol);

// Energy sum |v|^2 of each z-slice.
std::vector<double> slice_energies(const KSpaceVolume& vol);

inline constexpr double kDefaultSliceThreshold = 0.05;

/// Keeps z-slices with energy >= tau * max energy and inverse transforms each
/// kept x-y plane (unitary 2D DFT adjoint) into an image. Expects a volume
/// already passed through ifft_z. Slices are tagged with vol.source and
/// their z index, in increasing z. Throws EmptyAfterFilter if nothing
/// survives (including an all-zero volume).
SliceSet filter_slices(const KSpaceVolume& vol, double tau, SliceRole role = SliceRole::train);

// ifft_z followed by filter_slices.
SliceSet ingest_volume(const KSpaceVolume& vol, double tau, SliceRole role = SliceRole::train);

/// The first `train_patients` entries (in the given identifier order) become
/// the training set, the rest the test set. Requires at least two patients
/// and 1 <= train_patients < patients.size(); otherwise InvalidSplit.
std::pair<SliceSet, SliceSet> split_patients(const std::vector<SliceSet>& patients,
                                             std::size_t train_patients);

}  // namespace lcs
