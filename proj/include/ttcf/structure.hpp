#pragma once

// Block census of the Thurston form on W(tau; Z) against the prediction made
// from the region census of tau:
//   n_odd > 0               : h blocks d=1, n_odd/2 - 1 blocks d=2, nullity n_even
//   n_odd = 0, non-orientable: h-1 blocks d=1, nullity n_even
//   n_odd = 0, orientable   : h blocks d=1, nullity n_even - 1

#include <string>
#include <vector>

#include "ttcf/lattice.hpp"
#include "ttcf/train_track.hpp"

namespace ttcf {

enum class StructureCase { odd_regions, even_non_orientable, even_orientable };

const char* to_string(StructureCase c);

struct BlockCensus {
  std::vector<Int> invariants;  // ascending
  std::size_t nullity = 0;
  friend bool operator==(const BlockCensus&, const BlockCensus&) = default;
};

struct StructureReport {
  StructureCase structure_case = StructureCase::odd_regions;
  TopologyReport topology;
  std::vector<WeightSystem> lattice_basis;
  NormalForm normal_form;
  BlockCensus expected;
  BlockCensus computed;
  bool pass = false;
  std::string message;
};

/// Throws InvalidInput for a disconnected track.
StructureReport verify_structure(const TrainTrack& tau);

}  // namespace ttcf
