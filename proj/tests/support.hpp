#pragma once

// Test-only helpers: fixtures, random generators and independent oracles.
// Nothing here calls the code path it is used to check.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ttcf/lattice.hpp"
#include "ttcf/train_track.hpp"
#include "ttcf/triangulation.hpp"

namespace ttcf::testing {

inline const std::vector<std::pair<int, int>> kGrid = {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}};

/// Random track: S switches, B branches, germs dealt to the 2S sides in a
/// random order with every side non-empty. May be disconnected.
inline TrainTrack random_track(std::mt19937& rng, int max_switches = 3, int max_extra_branches = 3) {
  const int S = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_switches));
  const int B = S + 1 + static_cast<int>(rng() % static_cast<unsigned>(max_extra_branches));
  std::vector<Germ> germs;
  for (int b = 0; b < B; ++b) {
    germs.push_back({static_cast<std::size_t>(b), 0});
    germs.push_back({static_cast<std::size_t>(b), 1});
  }
  std::shuffle(germs.begin(), germs.end(), rng);
  std::vector<int> cut;
  for (int i = 1; i < 2 * B; ++i) cut.push_back(i);
  std::shuffle(cut.begin(), cut.end(), rng);
  cut.resize(static_cast<std::size_t>(2 * S - 1));
  std::sort(cut.begin(), cut.end());
  cut.insert(cut.begin(), 0);
  cut.push_back(2 * B);
  std::vector<Switch> sw(static_cast<std::size_t>(S));
  for (int k = 0; k < 2 * S; ++k)
    for (int i = cut[k]; i < cut[k + 1]; ++i) sw[k / 2].sides[k % 2].push_back(germs[static_cast<std::size_t>(i)]);
  return TrainTrack::create(static_cast<std::size_t>(B), std::move(sw));
}

/// One switch, two branches, each branch leaving side 0 and returning on
/// side 1 in the same order: a thickened torus with one boundary curve.
inline TrainTrack orientable_torus_track() {
  Switch s;
  s.sides[0] = {{0, 0}, {1, 0}};
  s.sides[1] = {{0, 1}, {1, 1}};
  return TrainTrack::create(2, {s});
}

/// A single closed branch: an annulus with two smooth boundary curves.
inline TrainTrack closed_curve_track() {
  Switch s;
  s.sides[0] = {{0, 0}};
  s.sides[1] = {{0, 1}};
  return TrainTrack::create(1, {s});
}

/// Branch 0 runs side 1 to side 0 and branch 1 returns to the side it
/// left from, so U is non-orientable; every region has an even spike count.
inline TrainTrack non_orientable_track() {
  Switch s;
  s.sides[0] = {{1, 0}};
  s.sides[1] = {{0, 1}, {1, 1}, {0, 0}};
  return TrainTrack::create(2, {s});
}

/// One switch, four branches; non-orientable, genus 2, one region.
inline TrainTrack non_orientable_genus_two_track() {
  Switch a;
  a.sides[0] = {{1, 1}, {0, 0}, {2, 0}, {0, 1}};
  a.sides[1] = {{3, 0}, {2, 1}, {1, 0}, {3, 1}};
  return TrainTrack::create(4, {a});
}

/// Determinant by Gaussian elimination over the rationals.
inline Int rational_determinant(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t n = m.rows();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(m(i, j));
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

/// Thurston form straight from its definition: half the sum over ordered
/// germ pairs (e right of e') on a common side of a(e) b(e') - a(e') b(e).
/// Returned doubled so no rounding is involved.
inline std::int64_t doubled_theta_oracle(const TrainTrack& tau, std::span<const std::int64_t> a,
                                         std::span<const std::int64_t> b) {
  std::int64_t sum = 0;
  for (const Switch& s : tau.switches())
    for (const auto& side : s.sides)
      for (std::size_t left = 0; left < side.size(); ++left)
        for (std::size_t right = left + 1; right < side.size(); ++right)
          sum += a[side[right].branch] * b[side[left].branch] - a[side[left].branch] * b[side[right].branch];
  return sum;
}

/// sigma from corner counts: a_ij = number of corners at which the side on
/// edge i is followed counterclockwise by the side on edge j.
inline std::vector<std::vector<int>> sigma_oracle(const GluingData& data) {
  // Edge labels by orbit of the gluing, in the order of first appearance.
  std::vector<int> label(3 * data.triangles, -1);
  int next = 0;
  for (std::size_t t = 0; t < data.triangles; ++t)
    for (int side = 0; side < 3; ++side) {
      const std::size_t idx = 3 * t + static_cast<std::size_t>(side);
      if (label[idx] >= 0) continue;
      label[idx] = next;
      for (const auto& g : data.gluings)
        for (int k = 0; k < 2; ++k)
          if (g[k].triangle == t && g[k].side == side)
            label[3 * g[1 - k].triangle + static_cast<std::size_t>(g[1 - k].side)] = next;
      ++next;
    }
  std::vector<std::vector<int>> a(static_cast<std::size_t>(next), std::vector<int>(static_cast<std::size_t>(next), 0));
  for (std::size_t t = 0; t < data.triangles; ++t)
    for (int c = 0; c < 3; ++c) {
      // At corner c, counterclockwise: from side c to side c-1.
      const int i = label[3 * t + static_cast<std::size_t>(c)];
      const int j = label[3 * t + static_cast<std::size_t>((c + 2) % 3)];
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
    }
  std::vector<std::vector<int>> sigma = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) sigma[i][j] = a[i][j] - a[j][i];
  return sigma;
}

inline IntMatrix random_antisymmetric(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = entry(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace ttcf::testing
