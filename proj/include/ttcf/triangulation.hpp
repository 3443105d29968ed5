#pragma once

// Ideal triangulations of punctured surfaces, encoded as side gluings of
// oriented triangles.
//
// Conventions. The sides 0, 1, 2 of a triangle run counterclockwise; side i
// goes from vertex i to vertex i+1, and corner c sits at vertex c between
// sides c-1 and c. Gluings reverse orientation: pairing (t, i) with (u, j)
// identifies vertex i of t with vertex j+1 of u and vertex i+1 of t with
// vertex j of u. Turning counterclockwise around a puncture inside a
// triangle goes from side c to side c-1 across corner c, so the walk
// corner (t, c) -> glued(t, c-1) = (u, j) -> corner (u, j) visits the
// corners around a puncture in counterclockwise order.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ttcf {

struct Slot {
  std::size_t triangle = 0;
  int side = 0;
  auto operator<=>(const Slot&) const = default;
};

struct Corner {
  std::size_t triangle = 0;
  int corner = 0;
  auto operator<=>(const Corner&) const = default;
};

/// Raw gluing data, exactly as read from a file.
struct GluingData {
  std::size_t triangles = 0;
  std::vector<std::array<Slot, 2>> gluings;
};

/// Outcome of `validate`. When `errors` is empty the remaining fields are
/// populated.
struct Diagnostics {
  std::vector<std::string> errors;
  int genus = 0;
  std::size_t punctures = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  /// One entry per puncture: the corners around it, counterclockwise.
  std::vector<std::vector<Corner>> corner_cycles;
  /// Same cycles read as the sequence of edge ends met counterclockwise.
  std::vector<std::vector<std::size_t>> edge_cycles;

  bool ok() const { return errors.empty(); }
};

Diagnostics validate(const GluingData& data);

class IdealTriangulation {
 public:
  /// Throws StructuralError listing every violated invariant.
  static IdealTriangulation from_gluings(const GluingData& data);

  std::size_t triangle_count() const { return triangles_; }
  std::size_t edge_count() const { return edge_slots_.size(); }
  std::size_t puncture_count() const { return corner_cycles_.size(); }
  int genus() const { return genus_; }

  Slot glued(Slot slot) const { return partner_[index(slot)]; }
  std::size_t edge_of(Slot slot) const { return edge_of_[index(slot)]; }
  /// Both slots of an edge; the first is the lexicographically smaller one.
  const std::array<Slot, 2>& edge_slots(std::size_t edge) const { return edge_slots_[edge]; }
  /// Edges of the three sides of a triangle.
  std::array<std::size_t, 3> triangle_edges(std::size_t t) const;

  std::size_t puncture_of(Corner c) const { return puncture_of_[3 * c.triangle + c.corner]; }
  const std::vector<std::vector<Corner>>& corner_cycles() const { return corner_cycles_; }

  /// Canonical gluing list: one entry per edge, in edge order.
  GluingData gluing_data() const;

 private:
  std::size_t index(Slot s) const { return 3 * s.triangle + static_cast<std::size_t>(s.side); }

  std::size_t triangles_ = 0;
  int genus_ = 0;
  std::vector<Slot> partner_;
  std::vector<std::size_t> edge_of_;
  std::vector<std::array<Slot, 2>> edge_slots_;
  std::vector<std::size_t> puncture_of_;
  std::vector<std::vector<Corner>> corner_cycles_;
};

/// Fan triangulation of the (4g+2s-2)-gon with side word
///   a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1 c1 c1^-1 ... c(s-1) c(s-1)^-1,
/// coned from polygon vertex 0. Throws InvalidInput unless s >= 1 and
/// 2 - 2g - s < 0.
IdealTriangulation standard_triangulation(int genus, int punctures);

/// The antisymmetric matrix sigma_ij = a_ij - a_ji, where a_ij counts how
/// often an end of edge j immediately follows an end of edge i going
/// counterclockwise around a puncture.
class SigmaMatrix {
 public:
  explicit SigmaMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// sum_ij k_i l_j sigma_ij
  std::int64_t pairing(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& l) const;

 private:
  std::size_t n_;
  std::vector<int> entries_;
};

SigmaMatrix sigma_matrix(const IdealTriangulation& t);

}  // namespace ttcf
