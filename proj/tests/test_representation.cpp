#include <doctest.h>

#include <numeric>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "support.hpp"
#include "ttcf/errors.hpp"
#include "ttcf/representation.hpp"

using namespace ttcf;

namespace {

using cd = std::complex<double>;

double deviation(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Representation make_rep(int g, int s, int N, std::uint64_t seed, int eps = 1) {
  const IdealTriangulation t = standard_triangulation(g, s);
  const AlgebraParams p = AlgebraParams::numeric(N, enumerate_omegas(N, eps).front());
  return Representation::build(t, random_spec(t, p, seed));
}

WeightSystem random_lattice_vector(const std::vector<WeightSystem>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  WeightSystem w(basis[0].size(), 0);
  for (const auto& b : basis) {
    const int k = c(rng);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += k * b[i];
  }
  return w;
}

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("symplectic basis") {
  for (auto [g, s] : testing::kGrid) {
    CAPTURE(g);
    CAPTURE(s);
    const IdealTriangulation t = standard_triangulation(g, s);
    const TrainTrack tau = from_triangulation(t);
    const SymplecticBasis b = symplectic_basis(t);
    const std::size_t m = static_cast<std::size_t>(3 * g + s - 3);
    REQUIRE(b.pairs() == m);
    REQUIRE(b.d.size() == m);
    CHECK(std::count(b.d.begin(), b.d.end(), 1) == g);
    CHECK(std::count(b.d.begin(), b.d.end(), 2) == static_cast<long>(2 * g + s - 3));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(theta(tau, b.alpha[i], b.beta[j]) == (i == j ? b.d[i] : 0));
        CHECK(theta(tau, b.alpha[i], b.alpha[j]) == 0);
        CHECK(theta(tau, b.beta[i], b.beta[j]) == 0);
      }
    REQUIRE(b.eta.size() == static_cast<std::size_t>(s));
    for (std::size_t k = 0; k < b.eta.size(); ++k) CHECK(b.eta[k] == puncture_weight(t, k));
    std::vector<IntVector> all, full;
    for (const auto& v : b.vectors()) all.push_back(to_int_vector(v));
    for (const auto& v : weight_lattice_basis(tau)) full.push_back(to_int_vector(v));
    CHECK(lattice_equal(all, full));
  }
}

TEST_CASE("dimension is N^(3g+s-3)") {
  CHECK(make_rep(1, 1, 3, 1).dimension() == 3);
  CHECK(make_rep(0, 4, 5, 1).dimension() == 5);
  CHECK(make_rep(1, 2, 3, 1).dimension() == 9);
  CHECK(make_rep(0, 3, 5, 1).dimension() == 1);
  CHECK(make_rep(1, 1, 1, 1).dimension() == 1);
  // 7^4 exceeds the dense-matrix limit.
  const IdealTriangulation t = standard_triangulation(2, 1);
  const AlgebraParams p = AlgebraParams::numeric(7, enumerate_omegas(7, 1).front());
  CHECK_THROWS_AS(Representation::build(t, random_spec(t, p, 0)), InvalidInput);
}

TEST_CASE("factor matrices satisfy the Weyl relations") {
  for (int N : {3, 5, 7}) {
    const Representation rep = make_rep(1, 2, N, 4);
    const cd q = std::pow(*rep.spec().params.omega, 4);
    const auto& basis = rep.spec().basis;
    for (std::size_t i = 0; i < basis.pairs(); ++i) {
      const auto [X, Y] = rep.factor(i);
      const cd qd = std::pow(q, basis.d[i]);
      CHECK(deviation(X * Y, qd * Y * X) < 1e-12);
      Matrix xn = Matrix::Identity(N, N), yn = Matrix::Identity(N, N);
      for (int k = 0; k < N; ++k) {
        xn = xn * X;
        yn = yn * Y;
      }
      CHECK(deviation(xn, rep.spec().zeta[i] * Matrix::Identity(N, N)) < 1e-12);
      CHECK(deviation(yn, rep.spec().zeta[basis.pairs() + i] * Matrix::Identity(N, N)) < 1e-12);
    }
  }
}

TEST_CASE("generators act on their tensor factor") {
  const Representation rep = make_rep(1, 2, 3, 9);
  const auto [X0, Y0] = rep.factor(0);
  const Matrix id = Matrix::Identity(3, 3);
  CHECK(deviation(rep.generator(0), Matrix(Eigen::kroneckerProduct(X0, id))) < 1e-12);
  CHECK(deviation(rep.generator(2), Matrix(Eigen::kroneckerProduct(Y0, id))) < 1e-12);
}

TEST_CASE("monomials multiply with w^(2 Theta)") {
  for (auto [g, s, N] : {std::tuple{1, 1, 3}, std::tuple{0, 4, 5}, std::tuple{1, 2, 3}}) {
    for (int eps : {1, -1}) {
      const Representation rep = make_rep(g, s, N, 17, eps);
      const auto& alg = rep.algebra();
      const auto basis = weight_lattice_basis(alg->track());
      const cd w = *rep.spec().params.omega;
      std::mt19937 rng(static_cast<unsigned>(N + g + s));
      for (int i = 0; i < 50; ++i) {
        const WeightSystem a = random_lattice_vector(basis, rng), b = random_lattice_vector(basis, rng);
        WeightSystem ab(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) ab[k] = a[k] + b[k];
        const Matrix lhs = rep.evaluate_monomial(a) * rep.evaluate_monomial(b);
        const Matrix rhs = std::pow(w, 2 * theta(alg->track(), a, b)) * rep.evaluate_monomial(ab);
        CHECK(deviation(lhs, rhs) < 1e-9);
        // Same through the algebra product.
        const NumericElement prod = mul(monomial<cd>(alg, a), monomial<cd>(alg, b));
        CHECK(deviation(rep.evaluate(prod), lhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("identity and puncture elements") {
  const Representation rep = make_rep(1, 2, 5, 3);
  const std::size_t dim = rep.dimension();
  CHECK(deviation(rep.evaluate(NumericElement::identity(rep.algebra())), Matrix::Identity(dim, dim)) < 1e-12);
  const auto& basis = rep.spec().basis;
  for (std::size_t k = 0; k < basis.eta.size(); ++k) {
    const Matrix h = rep.evaluate_monomial(basis.eta[k]);
    CHECK(deviation(h, rep.spec().h[k] * Matrix::Identity(dim, dim)) < 1e-12);
  }
}

TEST_CASE("evaluation does not depend on the factor order") {
  const Representation rep = make_rep(1, 2, 3, 5);
  const auto basis = weight_lattice_basis(rep.algebra()->track());
  std::mt19937 rng(31);
  for (int i = 0; i < 10; ++i) {
    const WeightSystem a = random_lattice_vector(basis, rng);
    const Matrix ref = rep.evaluate_monomial(a);
    std::vector<std::size_t> order(rep.spec().basis.vectors().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(deviation(rep.evaluate_monomial(a, order), ref) < 1e-9);
    }
  }
  const std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(rep.evaluate_monomial(basis[0], bad), InvalidInput);
}

TEST_CASE("verification passes on built representations") {
  for (auto [g, s, N] : {std::tuple{1, 1, 3}, std::tuple{1, 1, 5}, std::tuple{0, 4, 5}, std::tuple{1, 2, 3},
                         std::tuple{0, 3, 3}, std::tuple{1, 1, 1}}) {
    for (int eps : {1, -1}) {
      if (N == 1 && eps == -1) continue;
      CAPTURE(g);
      CAPTURE(s);
      CAPTURE(N);
      CAPTURE(eps);
      const Representation rep = make_rep(g, s, N, 2, eps);
      const VerificationReport r = verify(rep);
      CHECK(r.pass());
      CHECK(r.commutant_dimension == std::optional<std::size_t>(1));
      CHECK(frobenius_compat(rep).pass());
    }
  }
}

TEST_CASE("negative controls") {
  SUBCASE("tampered generator breaks the commutation check") {
    Representation rep = make_rep(1, 1, 3, 7);
    // X^2 against Y picks up q^2 instead of q.
    rep.set_generator(0, rep.generator(0) * rep.generator(0));
    const VerificationReport r = verify(rep);
    CHECK_FALSE(check_named(r, "commutation").pass);
    CHECK_FALSE(r.pass());
  }
  SUBCASE("wrong puncture scalar") {
    Representation rep = make_rep(0, 4, 3, 7);
    const std::size_t j = 2 * rep.spec().basis.pairs();
    rep.set_generator(j, rep.generator(j) * std::polar(1.0, 0.5));
    CHECK_FALSE(check_named(verify(rep), "puncture_scalars").pass);
  }
  SUBCASE("wrong size") {
    Representation rep = make_rep(1, 1, 3, 7);
    CHECK_THROWS_AS(rep.set_generator(0, Matrix::Identity(2, 2)), InvalidInput);
  }
}

TEST_CASE("zeta is twisted by epsilon^Theta") {
  const int N = 3;
  for (int eps : {1, -1}) {
    const Representation rep = make_rep(1, 1, N, 11, eps);
    const auto& b = rep.spec().basis;
    REQUIRE(b.d[0] == 1);
    WeightSystem ab(b.alpha[0].size());
    for (std::size_t k = 0; k < ab.size(); ++k) ab[k] = b.alpha[0][k] + b.beta[0][k];
    Matrix p = Matrix::Identity(N, N);
    const Matrix z = rep.evaluate_monomial(ab);
    for (int k = 0; k < N; ++k) p = p * z;
    const cd plain = rep.spec().zeta[0] * rep.spec().zeta[1];
    CHECK(deviation(p, rep.zeta(ab) * Matrix::Identity(N, N)) < 1e-9);
    CHECK(std::abs(rep.zeta(ab) - static_cast<double>(eps) * plain) < 1e-9);
    if (eps == -1) CHECK(deviation(p, plain * Matrix::Identity(N, N)) > 0.5);
  }
}

TEST_CASE("spec validation") {
  const IdealTriangulation t = standard_triangulation(0, 4);
  const AlgebraParams p = AlgebraParams::numeric(3, enumerate_omegas(3, 1).front());
  const RepresentationSpec good = random_spec(t, p, 0);
  CHECK_NOTHROW(make_spec(t, p, good.zeta, good.h));
  CHECK_THROWS_AS(make_spec(t, AlgebraParams::formal(3), good.zeta, good.h), InvalidInput);
  auto zeta = good.zeta;
  zeta.pop_back();
  CHECK_THROWS_AS(make_spec(t, p, zeta, good.h), InvalidInput);
  zeta = good.zeta;
  zeta[0] = 0.0;
  CHECK_THROWS_AS(make_spec(t, p, zeta, good.h), InvalidInput);
  auto h = good.h;
  h[0] *= std::polar(1.0, 0.1);
  CHECK_THROWS_AS(make_spec(t, p, good.zeta, h), InvalidInput);
  // Another N-th root of zeta(eta) is fine.
  h = good.h;
  h[0] *= std::pow(*p.omega, 4);
  CHECK_NOTHROW(make_spec(t, p, good.zeta, h));
}

TEST_CASE("principal roots") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int n : {1, 3, 5}) {
    for (int i = 0; i < 20; ++i) {
      const cd z(u(rng), u(rng));
      const cd r = principal_root(z, n);
      CHECK(std::abs(std::pow(r, n) - z) < 1e-12 * std::max(1.0, std::abs(z)));
      CHECK(std::arg(r) > -3.141592653589793 / n - 1e-12);
      CHECK(std::arg(r) <= 3.141592653589793 / n + 1e-12);
    }
  }
}

TEST_CASE("commutant dimension") {
  SUBCASE("diagonal matrices") {
    Matrix a = Matrix::Zero(3, 3);
    a.diagonal() << 1.0, 2.0, 3.0;
    for (auto m : {CommutantMethod::gram, CommutantMethod::spectral})
      CHECK(commutant_dimension({a}, m).dimension == std::optional<std::size_t>(3));
    Matrix b = Matrix::Zero(3, 3);
    b.diagonal() << 1.0, 1.0, 3.0;
    CHECK(commutant_dimension({b}, CommutantMethod::gram).dimension == std::optional<std::size_t>(5));
  }
  SUBCASE("sums of irreducibles") {
    const Representation rep = make_rep(1, 1, 3, 1);
    const Matrix x = rep.generator(0), y = rep.generator(1);
    auto direct_sum = [](const Matrix& m1, const Matrix& m2) {
      Matrix out = Matrix::Zero(m1.rows() + m2.rows(), m1.cols() + m2.cols());
      out.topLeftCorner(m1.rows(), m1.cols()) = m1;
      out.bottomRightCorner(m2.rows(), m2.cols()) = m2;
      return out;
    };
    // Two copies of the same irreducible: commutant M_2(C).
    CHECK(commutant_dimension({direct_sum(x, x), direct_sum(y, y)}, CommutantMethod::gram).dimension ==
          std::optional<std::size_t>(4));
    // Inequivalent irreducibles.
    const std::vector<Matrix> gens{direct_sum(x, 2.0 * x), direct_sum(y, y)};
    for (auto m : {CommutantMethod::gram, CommutantMethod::spectral})
      CHECK(commutant_dimension(gens, m).dimension == std::optional<std::size_t>(2));
  }
  SUBCASE("gram and spectral agree on representations") {
    for (auto [g, s, N] : {std::tuple{1, 1, 3}, std::tuple{0, 4, 5}, std::tuple{1, 2, 3}, std::tuple{1, 1, 5}}) {
      const Representation rep = make_rep(g, s, N, 8);
      std::vector<Matrix> gens;
      for (std::size_t j = 0; j < rep.spec().basis.vectors().size(); ++j) gens.push_back(rep.generator(j));
      const auto a = commutant_dimension(gens, CommutantMethod::gram);
      const auto b = commutant_dimension(gens, CommutantMethod::spectral, 3);
      CHECK(a.dimension == std::optional<std::size_t>(1));
      CHECK(b.dimension == a.dimension);
    }
  }
  CHECK_THROWS_AS(commutant_dimension({}), InvalidInput);
}
