#pragma once

// Train tracks in oriented surfaces, their integer weight lattices, the
// Thurston intersection form, and the complementary-region census.
//
// A switch has two sides. Each side lists its germs from left to right as
// seen by an observer standing at the switch and looking outward along
// that side. A germ e is "right of" a germ e' on the same side iff it comes
// later in that list. Going counterclockwise around a switch therefore
// meets reverse(side 0) followed by reverse(side 1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ttcf/lattice.hpp"

namespace ttcf {

class IdealTriangulation;

struct Germ {
  std::size_t branch = 0;
  int end = 0;  // 0 or 1
  auto operator<=>(const Germ&) const = default;
};

struct Switch {
  std::array<std::vector<Germ>, 2> sides;
};

using WeightSystem = std::vector<std::int64_t>;

class TrainTrack {
 public:
  struct Location {
    std::size_t sw = 0;
    int side = 0;
    std::size_t position = 0;
  };

  /// Throws StructuralError unless every branch end occupies exactly one germ
  /// slot and every switch side carries at least one germ.
  static TrainTrack create(std::size_t branches, std::vector<Switch> switches);

  std::size_t branch_count() const { return branches_; }
  std::size_t switch_count() const { return switches_.size(); }
  const std::vector<Switch>& switches() const { return switches_; }
  const Location& locate(Germ g) const { return where_[2 * g.branch + g.end]; }

  bool is_connected() const;

 private:
  std::size_t branches_ = 0;
  std::vector<Switch> switches_;
  std::vector<Location> where_;
};

bool satisfies_switch_conditions(const TrainTrack& tau, std::span<const std::int64_t> weights);
/// Throws InvalidWeightSystem naming the first failing switch.
void require_weight_system(const TrainTrack& tau, std::span<const std::int64_t> weights);

/// The track tau_lambda: switch i sits on edge i, branch 3t+c turns around
/// corner c of triangle t. Side 0 of switch i faces the triangle of the
/// first slot of edge i.
TrainTrack from_triangulation(const IdealTriangulation& t);

/// Z-basis of the integer weight lattice W(tau; Z), by exact elimination.
std::vector<WeightSystem> weight_lattice_basis(const TrainTrack& tau);

/// Thurston form, summed over every pair of germs on a common switch side
/// (adjacent or not). Throws IntegralityViolation if the doubled sum is odd.
std::int64_t theta(const TrainTrack& tau, std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta);

/// Theta as a precomputed branch-level matrix: 2*Theta(a, b) = a^T B b.
class ThetaForm {
 public:
  explicit ThetaForm(const TrainTrack& tau);
  std::size_t branch_count() const { return n_; }
  std::int64_t doubled(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) const;
  /// Throws IntegralityViolation when the doubled value is odd.
  std::int64_t operator()(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> b_;
};

SkewForm theta_matrix(const TrainTrack& tau, std::span<const WeightSystem> basis);

/// eta_k: number of sides of each branch of tau_lambda facing puncture k,
/// read off the corner cycles of the triangulation.
WeightSystem puncture_weight(const IdealTriangulation& t, std::size_t puncture);

/// Sum of the side-0 weights at each switch.
std::vector<std::int64_t> switch_sums(const TrainTrack& tau, std::span<const std::int64_t> weights);

/// Inverse of switch_sums on tau_lambda. Branch 3t+c gets
/// (k(side c) + k(side c-1) - k(side c+1)) / 2. Throws ParityViolation when
/// a triangle's three switch sums add up to an odd number.
WeightSystem from_switch_sums(const IdealTriangulation& t, std::span<const std::int64_t> sums);

/// One step of a region boundary: traverse `branch` from germ `from` to germ
/// `to`, then turn counterclockwise at the switch of `to` through a corner
/// that is a spike iff `spike`.
struct BoundaryStep {
  Germ from;
  Germ to;
  bool spike = false;
};

struct Region {
  std::vector<BoundaryStep> boundary;
  std::size_t spikes = 0;
  /// Set by regions(tau_lambda, t) for regions around a puncture.
  std::optional<std::size_t> puncture;
};

struct TopologyReport {
  int genus = 0;  // h, genus of the thickened track U
  std::size_t n_even = 0;
  std::size_t n_odd = 0;
  bool orientable = false;
  std::size_t region_count() const { return n_even + n_odd; }
};

struct Census {
  std::vector<Region> regions;
  TopologyReport report;
};

/// Regions of U - tau by boundary walking, with genus and orientability.
/// Throws InvalidInput for a disconnected track.
Census regions(const TrainTrack& tau);
/// Same, additionally tagging the puncture regions of tau_lambda.
Census regions(const TrainTrack& tau_lambda, const IdealTriangulation& t);

/// Alternating-sign weight system of a region with an even spike count
/// (plain traversal counts when spikeless). Throws OddSpikes otherwise.
WeightSystem region_weight_system(const TrainTrack& tau, const Region& region);

}  // namespace ttcf
