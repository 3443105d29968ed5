#include <doctest.h>

#include <set>

#include "support.hpp"
#include "ttcf/errors.hpp"
#include "ttcf/triangulation.hpp"

using namespace ttcf;

namespace {

GluingData two_triangle_torus() {
  // Square with sides a b a^-1 b^-1 cut along a diagonal.
  GluingData d;
  d.triangles = 2;
  d.gluings = {{Slot{0, 0}, Slot{1, 0}}, {Slot{0, 1}, Slot{1, 1}}, {Slot{0, 2}, Slot{1, 2}}};
  return d;
}

bool has_error(const Diagnostics& d, const std::string& needle) {
  for (const auto& e : d.errors)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("standard triangulation counts") {
  for (auto [g, s] : testing::kGrid) {
    CAPTURE(g);
    CAPTURE(s);
    const IdealTriangulation t = standard_triangulation(g, s);
    CHECK(t.edge_count() == static_cast<std::size_t>(6 * g + 3 * s - 6));
    CHECK(t.triangle_count() == static_cast<std::size_t>(4 * g + 2 * s - 4));
    CHECK(t.genus() == g);
    CHECK(t.puncture_count() == static_cast<std::size_t>(s));
    const Diagnostics d = validate(t.gluing_data());
    CHECK(d.ok());
    CHECK(d.genus == g);
    CHECK(d.punctures == static_cast<std::size_t>(s));
  }
}

TEST_CASE("small surfaces") {
  const IdealTriangulation torus = standard_triangulation(1, 1);
  CHECK(torus.triangle_count() == 2);
  CHECK(torus.edge_count() == 3);
  const IdealTriangulation pants = standard_triangulation(0, 3);
  CHECK(pants.triangle_count() == 2);
  CHECK(pants.edge_count() == 3);
  CHECK(pants.puncture_count() == 3);
}

TEST_CASE("surfaces without ideal triangulations are rejected") {
  CHECK_THROWS_AS(standard_triangulation(0, 1), InvalidInput);
  CHECK_THROWS_AS(standard_triangulation(0, 2), InvalidInput);
  CHECK_THROWS_AS(standard_triangulation(1, 0), InvalidInput);
  CHECK_THROWS_AS(standard_triangulation(-1, 3), InvalidInput);
}

TEST_CASE("hand-written torus gluing") {
  const IdealTriangulation t = IdealTriangulation::from_gluings(two_triangle_torus());
  CHECK(t.genus() == 1);
  CHECK(t.puncture_count() == 1);
  REQUIRE(t.corner_cycles().size() == 1);
  CHECK(t.corner_cycles()[0].size() == 6);
}

TEST_CASE("gluing is an orientation-reversing involution on slots") {
  for (auto [g, s] : testing::kGrid) {
    const IdealTriangulation t = standard_triangulation(g, s);
    for (std::size_t tri = 0; tri < t.triangle_count(); ++tri)
      for (int side = 0; side < 3; ++side) {
        const Slot a{tri, side};
        const Slot b = t.glued(a);
        CHECK(b != a);
        CHECK(t.glued(b) == a);
        CHECK(t.edge_of(a) == t.edge_of(b));
      }
  }
}

TEST_CASE("corner cycles partition the corners") {
  for (auto [g, s] : testing::kGrid) {
    const IdealTriangulation t = standard_triangulation(g, s);
    std::set<Corner> seen;
    for (std::size_t k = 0; k < t.puncture_count(); ++k)
      for (const Corner& c : t.corner_cycles()[k]) {
        CHECK(seen.insert(c).second);
        CHECK(t.puncture_of(c) == k);
      }
    CHECK(seen.size() == 3 * t.triangle_count());
  }
}

TEST_CASE("corner walk turns counterclockwise") {
  // Consecutive corners (t, c), (u, j) in a cycle satisfy glued(t, c-1) = (u, j).
  const IdealTriangulation t = standard_triangulation(1, 2);
  for (const auto& cycle : t.corner_cycles())
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Corner a = cycle[i];
      const Corner b = cycle[(i + 1) % cycle.size()];
      CHECK(t.glued(Slot{a.triangle, (a.corner + 2) % 3}) == Slot{b.triangle, b.corner});
    }
}

TEST_CASE("validate reports each violation") {
  SUBCASE("self-glued slot") {
    GluingData d = two_triangle_torus();
    d.gluings[0] = {Slot{0, 0}, Slot{0, 0}};
    d.gluings.push_back({Slot{1, 0}, Slot{1, 0}});
    CHECK(has_error(validate(d), "itself"));
  }
  SUBCASE("slot used twice") {
    GluingData d = two_triangle_torus();
    d.gluings[2] = {Slot{0, 2}, Slot{1, 1}};
    const Diagnostics diag = validate(d);
    CHECK_FALSE(diag.ok());
    CHECK(has_error(diag, "more than once"));
  }
  SUBCASE("unglued slot") {
    GluingData d = two_triangle_torus();
    d.gluings.pop_back();
    CHECK(has_error(validate(d), "unglued"));
  }
  SUBCASE("out of range") {
    GluingData d = two_triangle_torus();
    d.gluings[0][1] = Slot{5, 0};
    CHECK(has_error(validate(d), "range"));
  }
  SUBCASE("disconnected") {
    GluingData a = two_triangle_torus();
    GluingData d;
    d.triangles = 4;
    d.gluings = a.gluings;
    for (auto g : a.gluings) d.gluings.push_back({Slot{g[0].triangle + 2, g[0].side}, Slot{g[1].triangle + 2, g[1].side}});
    CHECK(has_error(validate(d), "connected"));
  }
  SUBCASE("empty") {
    CHECK_FALSE(validate(GluingData{}).ok());
  }
  SUBCASE("from_gluings throws") {
    GluingData d = two_triangle_torus();
    d.gluings.pop_back();
    CHECK_THROWS_AS(IdealTriangulation::from_gluings(d), StructuralError);
  }
}

TEST_CASE("sigma matrix of the once-punctured torus") {
  const SigmaMatrix sigma = sigma_matrix(standard_triangulation(1, 1));
  const int expected[3][3] = {{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(sigma(i, j) == expected[i][j]);
}

TEST_CASE("sigma matches the corner-count oracle") {
  for (auto [g, s] : testing::kGrid) {
    const IdealTriangulation t = standard_triangulation(g, s);
    const SigmaMatrix sigma = sigma_matrix(t);
    const auto oracle = testing::sigma_oracle(t.gluing_data());
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
      int row = 0;
      for (std::size_t j = 0; j < t.edge_count(); ++j) {
        CHECK(sigma(i, j) == oracle[i][j]);
        CHECK(sigma(i, j) == -sigma(j, i));
        CHECK(std::abs(sigma(i, j)) <= 2);
        row += sigma(i, j);
      }
      CHECK(row == 0);
    }
  }
}
