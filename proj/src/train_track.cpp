#include "ttcf/train_track.hpp"

#include <numeric>
#include <string>

#include "ttcf/errors.hpp"
#include "ttcf/triangulation.hpp"

namespace ttcf {

namespace {

std::string germ_name(Germ g) { return "(" + std::to_string(g.branch) + "," + std::to_string(g.end) + ")"; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // Path compression keeping parities relative to the root.
    int acc = par;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const int old = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {root, par};
  }

  /// Records value(a) xor value(b) == rel; false on contradiction.
  bool unite(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace

TrainTrack TrainTrack::create(std::size_t branches, std::vector<Switch> switches) {
  std::vector<std::string> errors;
  if (switches.empty()) errors.push_back("train track has no switches");
  std::vector<std::optional<Location>> where(2 * branches);
  for (std::size_t s = 0; s < switches.size(); ++s) {
    for (int side = 0; side < 2; ++side) {
      const auto& germs = switches[s].sides[side];
      if (germs.empty()) {
        errors.push_back("switch " + std::to_string(s) + " side " + std::to_string(side) + " has no germs");
      }
      for (std::size_t pos = 0; pos < germs.size(); ++pos) {
        const Germ g = germs[pos];
        if (g.branch >= branches || g.end < 0 || g.end > 1) {
          errors.push_back("germ " + germ_name(g) + " at switch " + std::to_string(s) + " is out of range");
          continue;
        }
        auto& slot = where[2 * g.branch + g.end];
        if (slot) {
          errors.push_back("germ " + germ_name(g) + " occurs more than once");
        } else {
          slot = Location{s, side, pos};
        }
      }
    }
  }
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (!where[i]) errors.push_back("germ " + germ_name({i / 2, static_cast<int>(i % 2)}) + " is not attached");
  }
  if (!errors.empty()) {
    std::string msg = "invalid train track:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw StructuralError(msg);
  }
  TrainTrack t;
  t.branches_ = branches;
  t.switches_ = std::move(switches);
  t.where_.reserve(where.size());
  for (const auto& w : where) t.where_.push_back(*w);
  return t;
}

bool TrainTrack::is_connected() const {
  UnionFind uf(switches_.size());
  for (std::size_t b = 0; b < branches_; ++b) uf.unite(where_[2 * b].sw, where_[2 * b + 1].sw, 0);
  const std::size_t root = uf.find(0).first;
  for (std::size_t s = 1; s < switches_.size(); ++s)
    if (uf.find(s).first != root) return false;
  return true;
}

bool satisfies_switch_conditions(const TrainTrack& tau, std::span<const std::int64_t> weights) {
  if (weights.size() != tau.branch_count()) return false;
  for (const Switch& sw : tau.switches()) {
    std::int64_t diff = 0;
    for (Germ g : sw.sides[0]) diff += weights[g.branch];
    for (Germ g : sw.sides[1]) diff -= weights[g.branch];
    if (diff != 0) return false;
  }
  return true;
}

void require_weight_system(const TrainTrack& tau, std::span<const std::int64_t> weights) {
  if (weights.size() != tau.branch_count()) {
    throw InvalidWeightSystem("expected " + std::to_string(tau.branch_count()) + " branch weights, got " +
                              std::to_string(weights.size()));
  }
  for (std::size_t s = 0; s < tau.switch_count(); ++s) {
    std::int64_t diff = 0;
    for (Germ g : tau.switches()[s].sides[0]) diff += weights[g.branch];
    for (Germ g : tau.switches()[s].sides[1]) diff -= weights[g.branch];
    if (diff != 0) throw InvalidWeightSystem("switch condition fails at switch " + std::to_string(s));
  }
}

TrainTrack from_triangulation(const IdealTriangulation& t) {
  std::vector<Switch> switches(t.edge_count());
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      const Slot slot = t.edge_slots(e)[side];
      // Facing into the triangle, the corner at the start of the side is on
      // the left. Branch 3t+c has end 0 on side c and end 1 on side c-1.
      const std::size_t left = 3 * slot.triangle + static_cast<std::size_t>(slot.side);
      const std::size_t right = 3 * slot.triangle + static_cast<std::size_t>((slot.side + 1) % 3);
      switches[e].sides[side] = {Germ{left, 0}, Germ{right, 1}};
    }
  }
  return TrainTrack::create(3 * t.triangle_count(), std::move(switches));
}

std::vector<WeightSystem> weight_lattice_basis(const TrainTrack& tau) {
  IntMatrix conditions(tau.switch_count(), tau.branch_count());
  for (std::size_t s = 0; s < tau.switch_count(); ++s) {
    for (Germ g : tau.switches()[s].sides[0]) conditions(s, g.branch) += 1;
    for (Germ g : tau.switches()[s].sides[1]) conditions(s, g.branch) -= 1;
  }
  std::vector<WeightSystem> basis;
  for (const IntVector& v : integer_kernel(conditions)) basis.push_back(to_int64_vector(v));
  return basis;
}

std::int64_t theta(const TrainTrack& tau, std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) {
  require_weight_system(tau, alpha);
  require_weight_system(tau, beta);
  __int128 doubled = 0;
  for (const Switch& sw : tau.switches()) {
    for (const auto& germs : sw.sides) {
      for (std::size_t left = 0; left < germs.size(); ++left) {
        for (std::size_t right = left + 1; right < germs.size(); ++right) {
          const std::size_t e = germs[right].branch, f = germs[left].branch;
          doubled += static_cast<__int128>(alpha[e]) * beta[f] - static_cast<__int128>(alpha[f]) * beta[e];
        }
      }
    }
  }
  if (doubled % 2 != 0) throw IntegralityViolation("doubled Thurston sum is odd");
  return static_cast<std::int64_t>(doubled / 2);
}

ThetaForm::ThetaForm(const TrainTrack& tau) : n_(tau.branch_count()), b_(n_ * n_, 0) {
  for (const Switch& sw : tau.switches()) {
    for (const auto& germs : sw.sides) {
      for (std::size_t left = 0; left < germs.size(); ++left) {
        for (std::size_t right = left + 1; right < germs.size(); ++right) {
          const std::size_t e = germs[right].branch, f = germs[left].branch;
          b_[e * n_ + f] += 1;
          b_[f * n_ + e] -= 1;
        }
      }
    }
  }
}

std::int64_t ThetaForm::doubled(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (alpha[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += b_[i * n_ + j] * beta[j];
    sum += alpha[i] * row;
  }
  return sum;
}

std::int64_t ThetaForm::operator()(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta) const {
  const std::int64_t d = doubled(alpha, beta);
  if (d % 2 != 0) throw IntegralityViolation("doubled Thurston sum is odd");
  return d / 2;
}

SkewForm theta_matrix(const TrainTrack& tau, std::span<const WeightSystem> basis) {
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const std::int64_t v = theta(tau, basis[i], basis[j]);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return SkewForm(std::move(m));
}

WeightSystem puncture_weight(const IdealTriangulation& t, std::size_t puncture) {
  if (puncture >= t.puncture_count()) {
    throw InvalidInput("puncture index " + std::to_string(puncture) + " out of range (have " +
                       std::to_string(t.puncture_count()) + ")");
  }
  // Branch 3t+c has the corner piece at vertex c on one side and the
  // triangle's central region on the other.
  WeightSystem w(3 * t.triangle_count(), 0);
  for (Corner c : t.corner_cycles()[puncture]) w[3 * c.triangle + c.corner] += 1;
  return w;
}

std::vector<std::int64_t> switch_sums(const TrainTrack& tau, std::span<const std::int64_t> weights) {
  require_weight_system(tau, weights);
  std::vector<std::int64_t> sums(tau.switch_count(), 0);
  for (std::size_t s = 0; s < tau.switch_count(); ++s)
    for (Germ g : tau.switches()[s].sides[0]) sums[s] += weights[g.branch];
  return sums;
}

WeightSystem from_switch_sums(const IdealTriangulation& t, std::span<const std::int64_t> sums) {
  if (sums.size() != t.edge_count()) {
    throw InvalidInput("expected " + std::to_string(t.edge_count()) + " switch sums, got " +
                       std::to_string(sums.size()));
  }
  WeightSystem w(3 * t.triangle_count());
  for (std::size_t tri = 0; tri < t.triangle_count(); ++tri) {
    const auto edges = t.triangle_edges(tri);
    const std::int64_t k[3] = {sums[edges[0]], sums[edges[1]], sums[edges[2]]};
    if ((k[0] + k[1] + k[2]) % 2 != 0) {
      throw ParityViolation(tri, "switch sums on triangle " + std::to_string(tri) + " have odd total");
    }
    for (int c = 0; c < 3; ++c) w[3 * tri + c] = (k[c] + k[(c + 2) % 3] - k[(c + 1) % 3]) / 2;
  }
  return w;
}

namespace {

// Counterclockwise neighbour of a germ at its switch: reverse(side 0) then
// reverse(side 1). Returns the next germ and whether the corner between
// them is a spike (both germs on the same side).
std::pair<Germ, bool> ccw_next(const TrainTrack& tau, Germ g) {
  const auto& loc = tau.locate(g);
  const auto& sides = tau.switches()[loc.sw].sides;
  if (loc.position > 0) return {sides[loc.side][loc.position - 1], true};
  const auto& other = sides[1 - loc.side];
  return {other.back(), false};
}

Census build_census(const TrainTrack& tau) {
  if (!tau.is_connected()) throw InvalidInput("train track is not connected");
  Census c;
  const std::size_t germs = 2 * tau.branch_count();
  std::vector<bool> used(germs, false);
  for (std::size_t start = 0; start < germs; ++start) {
    if (used[start]) continue;
    Region r;
    std::size_t cur = start;
    while (!used[cur]) {
      used[cur] = true;
      const Germ from{cur / 2, static_cast<int>(cur % 2)};
      const Germ to{from.branch, 1 - from.end};
      const auto [next, spike] = ccw_next(tau, to);
      r.boundary.push_back({from, to, spike});
      if (spike) ++r.spikes;
      cur = 2 * next.branch + next.end;
    }
    if (r.spikes % 2 == 0) {
      ++c.report.n_even;
    } else {
      ++c.report.n_odd;
    }
    c.regions.push_back(std::move(r));
  }

  const long chi = static_cast<long>(tau.switch_count()) - static_cast<long>(tau.branch_count());
  const long twice_h = 2 - chi - static_cast<long>(c.regions.size());
  if (twice_h < 0 || twice_h % 2 != 0) throw InternalError("region count inconsistent with Euler characteristic");
  c.report.genus = static_cast<int>(twice_h / 2);

  // Unknowns: switch directions, then branch directions.
  UnionFind uf(tau.switch_count() + tau.branch_count());
  bool orientable = true;
  for (std::size_t s = 0; s < tau.switch_count() && orientable; ++s)
    for (int side = 0; side < 2; ++side)
      for (Germ g : tau.switches()[s].sides[side])
        if (!uf.unite(s, tau.switch_count() + g.branch, side ^ g.end)) orientable = false;
  c.report.orientable = orientable;
  return c;
}

}  // namespace

Census regions(const TrainTrack& tau) { return build_census(tau); }

Census regions(const TrainTrack& tau_lambda, const IdealTriangulation& t) {
  Census c = build_census(tau_lambda);
  for (Region& r : c.regions) {
    if (r.spikes != 0) continue;
    const std::size_t b = r.boundary.front().from.branch;
    r.puncture = t.puncture_of({b / 3, static_cast<int>(b % 3)});
  }
  return c;
}

WeightSystem region_weight_system(const TrainTrack& tau, const Region& region) {
  if (region.spikes % 2 != 0) {
    throw OddSpikes("region has " + std::to_string(region.spikes) + " spikes");
  }
  WeightSystem w(tau.branch_count(), 0);
  const std::size_t len = region.boundary.size();
  std::size_t first = 0;
  if (region.spikes > 0) {
    while (!region.boundary[first].spike) ++first;
    first = (first + 1) % len;
  }
  std::int64_t sign = 1;
  for (std::size_t i = 0; i < len; ++i) {
    const BoundaryStep& step = region.boundary[(first + i) % len];
    w[step.from.branch] += sign;
    if (step.spike) sign = -sign;
  }
  require_weight_system(tau, w);
  return w;
}

}  // namespace ttcf
