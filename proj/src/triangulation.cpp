#include "ttcf/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "ttcf/errors.hpp"

namespace ttcf {

namespace {

std::string slot_name(Slot s) {
  std::ostringstream os;
  os << "(" << s.triangle << "," << s.side << ")";
  return os.str();
}

// Corner walk shared by validate() and the triangulation constructor.
// partner is indexed by 3*t+side and must be a fixed-point-free involution.
std::vector<std::vector<Corner>> walk_corners(std::size_t triangles, const std::vector<Slot>& partner,
                                              std::vector<std::size_t>& puncture_of) {
  std::vector<std::vector<Corner>> cycles;
  puncture_of.assign(3 * triangles, SIZE_MAX);
  for (std::size_t start = 0; start < 3 * triangles; ++start) {
    if (puncture_of[start] != SIZE_MAX) continue;
    std::vector<Corner> cycle;
    std::size_t cur = start;
    while (puncture_of[cur] == SIZE_MAX) {
      puncture_of[cur] = cycles.size();
      Corner c{cur / 3, static_cast<int>(cur % 3)};
      cycle.push_back(c);
      Slot exit{c.triangle, (c.corner + 2) % 3};
      Slot next = partner[3 * exit.triangle + exit.side];
      cur = 3 * next.triangle + static_cast<std::size_t>(next.side);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Diagnostics validate(const GluingData& data) {
  Diagnostics d;
  const std::size_t nt = data.triangles;
  if (nt == 0) {
    d.errors.push_back("triangulation has no triangles");
    return d;
  }
  std::vector<std::optional<Slot>> partner(3 * nt);
  for (std::size_t gi = 0; gi < data.gluings.size(); ++gi) {
    const auto& [a, b] = data.gluings[gi];
    bool in_range = true;
    for (Slot s : {a, b}) {
      if (s.triangle >= nt || s.side < 0 || s.side > 2) {
        d.errors.push_back("gluing " + std::to_string(gi) + " references slot " + slot_name(s) +
                           " out of range");
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (a == b) {
      d.errors.push_back("slot " + slot_name(a) + " is glued to itself");
      continue;
    }
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto& p = partner[3 * x.triangle + x.side];
      if (p) {
        d.errors.push_back("slot " + slot_name(x) + " is glued more than once");
      } else {
        p = y;
      }
    }
  }
  for (std::size_t i = 0; i < 3 * nt; ++i) {
    if (!partner[i]) d.errors.push_back("slot " + slot_name({i / 3, static_cast<int>(i % 3)}) + " is unglued");
  }
  if (!d.errors.empty()) return d;

  std::vector<Slot> p(3 * nt);
  for (std::size_t i = 0; i < 3 * nt; ++i) p[i] = *partner[i];
  for (std::size_t i = 0; i < 3 * nt; ++i) {
    const Slot back = p[3 * p[i].triangle + p[i].side];
    if (back != Slot{i / 3, static_cast<int>(i % 3)}) {
      d.errors.push_back("gluing is not an involution at slot " + slot_name(back));
    }
  }
  if (!d.errors.empty()) return d;

  // Connectivity across gluings.
  std::vector<std::size_t> comp(nt);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t i = 0; i < 3 * nt; ++i) comp[find(i / 3)] = find(p[i].triangle);
  for (std::size_t t = 1; t < nt; ++t) {
    if (find(t) != find(0)) {
      d.errors.push_back("triangle " + std::to_string(t) + " is not connected to triangle 0");
      return d;
    }
  }

  std::vector<std::size_t> puncture_of;
  d.corner_cycles = walk_corners(nt, p, puncture_of);

  // Edge numbering by first slot, in slot order.
  std::vector<std::size_t> edge_of(3 * nt, SIZE_MAX);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < 3 * nt; ++i) {
    if (edge_of[i] != SIZE_MAX) continue;
    edge_of[i] = edge_of[3 * p[i].triangle + p[i].side] = edges++;
  }
  for (const auto& cyc : d.corner_cycles) {
    std::vector<std::size_t> ends;
    for (Corner c : cyc) ends.push_back(edge_of[3 * c.triangle + c.corner]);
    d.edge_cycles.push_back(std::move(ends));
  }

  d.faces = nt;
  d.edges = edges;
  d.punctures = d.corner_cycles.size();
  const long chi = static_cast<long>(d.punctures) - static_cast<long>(d.edges) + static_cast<long>(d.faces);
  if ((2 - chi) % 2 != 0 || 2 - chi < 0) {
    d.errors.push_back("Euler characteristic " + std::to_string(chi) + " does not give an integer genus");
    return d;
  }
  d.genus = static_cast<int>((2 - chi) / 2);
  const long g = d.genus, s = static_cast<long>(d.punctures);
  if (2 - 2 * g - s >= 0) {
    d.errors.push_back("surface with genus " + std::to_string(g) + " and " + std::to_string(s) +
                       " punctures has non-negative Euler characteristic");
  }
  if (static_cast<long>(d.edges) != 6 * g + 3 * s - 6 || static_cast<long>(d.faces) != 4 * g + 2 * s - 4) {
    d.errors.push_back("edge/face counts do not match 6g+3s-6 and 4g+2s-4");
  }
  return d;
}

IdealTriangulation IdealTriangulation::from_gluings(const GluingData& data) {
  Diagnostics d = validate(data);
  if (!d.ok()) {
    std::string msg = "invalid triangulation:";
    for (const auto& e : d.errors) msg += "\n  " + e;
    throw StructuralError(msg);
  }
  IdealTriangulation t;
  t.triangles_ = data.triangles;
  t.genus_ = d.genus;
  t.partner_.resize(3 * data.triangles);
  for (const auto& [a, b] : data.gluings) {
    t.partner_[t.index(a)] = b;
    t.partner_[t.index(b)] = a;
  }
  t.edge_of_.assign(3 * data.triangles, SIZE_MAX);
  for (std::size_t i = 0; i < 3 * data.triangles; ++i) {
    if (t.edge_of_[i] != SIZE_MAX) continue;
    const Slot a{i / 3, static_cast<int>(i % 3)};
    const Slot b = t.partner_[i];
    t.edge_of_[i] = t.edge_of_[t.index(b)] = t.edge_slots_.size();
    t.edge_slots_.push_back({a, b});
  }
  t.corner_cycles_ = walk_corners(data.triangles, t.partner_, t.puncture_of_);
  return t;
}

std::array<std::size_t, 3> IdealTriangulation::triangle_edges(std::size_t tri) const {
  return {edge_of({tri, 0}), edge_of({tri, 1}), edge_of({tri, 2})};
}

GluingData IdealTriangulation::gluing_data() const {
  GluingData d;
  d.triangles = triangles_;
  d.gluings = edge_slots_;
  return d;
}

IdealTriangulation standard_triangulation(int genus, int punctures) {
  if (genus < 0 || punctures < 1 || 2 - 2 * genus - punctures >= 0) {
    throw InvalidInput("no ideal triangulation for genus " + std::to_string(genus) + " with " +
                       std::to_string(punctures) + " punctures");
  }
  const std::size_t sides = static_cast<std::size_t>(4 * genus + 2 * punctures - 2);
  const std::size_t triangles = sides - 2;

  // Label polygon side k by (letter, exponent).
  std::vector<std::pair<std::size_t, int>> word;
  std::size_t letter = 0;
  for (int i = 0; i < genus; ++i, letter += 2) {
    word.insert(word.end(), {{letter, +1}, {letter + 1, +1}, {letter, -1}, {letter + 1, -1}});
  }
  for (int i = 0; i + 1 < punctures; ++i, ++letter) {
    word.insert(word.end(), {{letter, +1}, {letter, -1}});
  }

  // Triangle j has vertices (0, j+1, j+2).
  auto polygon_slot = [&](std::size_t k) -> Slot {
    if (k == 0) return {0, 0};
    if (k == sides - 1) return {triangles - 1, 2};
    return {k - 1, 1};
  };

  GluingData data;
  data.triangles = triangles;
  for (std::size_t j = 0; j + 1 < triangles; ++j) data.gluings.push_back({Slot{j, 2}, Slot{j + 1, 0}});
  for (std::size_t k = 0; k < sides; ++k) {
    if (word[k].second != +1) continue;
    for (std::size_t k2 = 0; k2 < sides; ++k2) {
      if (word[k2].first == word[k].first && word[k2].second == -1) {
        data.gluings.push_back({polygon_slot(k), polygon_slot(k2)});
      }
    }
  }
  return IdealTriangulation::from_gluings(data);
}

std::int64_t SigmaMatrix::pairing(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& l) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (k[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) sum += k[i] * l[j] * (*this)(i, j);
  }
  return sum;
}

SigmaMatrix sigma_matrix(const IdealTriangulation& t) {
  SigmaMatrix sigma(t.edge_count());
  // Across corner c the counterclockwise successor of side c is side c-1.
  for (std::size_t tri = 0; tri < t.triangle_count(); ++tri) {
    for (int c = 0; c < 3; ++c) {
      const std::size_t i = t.edge_of({tri, c});
      const std::size_t j = t.edge_of({tri, (c + 2) % 3});
      sigma(i, j) += 1;
      sigma(j, i) -= 1;
    }
  }
  return sigma;
}

}  // namespace ttcf
