#pragma once

// Irreducible representations of Z^w(lambda) at a root of unity of odd order
// N, built from a symplectic basis of the weight lattice. With m = 3g+s-3,
// V = (C^N)^(tensor m); the i-th pair (alpha_i, beta_i) acts on the i-th
// factor by
//     X v_j = zeta(alpha_i)^(1/N) q^(d_i j) v_j,   Y v_j = zeta(beta_i)^(1/N) v_(j+1),
// indices mod N, and H_k acts by the scalar h_k.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ttcf/algebra.hpp"
#include "ttcf/triangulation.hpp"

namespace ttcf {

using Matrix = Eigen::MatrixXcd;

/// alpha_1..alpha_m, beta_1..beta_m, eta_1..eta_s with Theta(alpha_i, beta_j)
/// = d_i [i = j], all other pairings zero, d = (1 x g, 2 x (2g+s-3)).
struct SymplecticBasis {
  std::vector<WeightSystem> alpha;
  std::vector<WeightSystem> beta;
  std::vector<WeightSystem> eta;
  std::vector<int> d;

  std::size_t pairs() const { return alpha.size(); }
  /// All vectors in the order alpha, beta, eta.
  std::vector<WeightSystem> vectors() const;
};

/// Throws InternalError if the normal form does not have the shape above.
SymplecticBasis symplectic_basis(const IdealTriangulation& t);

struct RepresentationSpec {
  AlgebraParams params;  // must carry a concrete omega
  SymplecticBasis basis;
  /// zeta on basis vectors, in the order of SymplecticBasis::vectors().
  std::vector<std::complex<double>> zeta;
  std::vector<std::complex<double>> h;
};

/// Validates sizes, zeta != 0 and h_k^N = zeta(eta_k) to relative
/// `tolerance`; throws InvalidInput otherwise.
RepresentationSpec make_spec(const IdealTriangulation& t, const AlgebraParams& params,
                             std::vector<std::complex<double>> zeta, std::vector<std::complex<double>> h,
                             double tolerance = 1e-9);

/// Unit-modulus random zeta and an N-th root h_k of each zeta(eta_k).
RepresentationSpec random_spec(const IdealTriangulation& t, const AlgebraParams& params, std::uint64_t seed);

/// Principal N-th root, argument in (-pi/N, pi/N].
std::complex<double> principal_root(std::complex<double> z, int n);

/// zeta extended to the whole lattice. A representation forces
/// zeta(a + b) = epsilon^Theta(a, b) zeta(a) zeta(b), which is plain
/// multiplicativity when epsilon = +1.
std::complex<double> zeta_of(const RepresentationSpec& spec, const ThetaForm& theta,
                             std::span<const std::int64_t> coordinates);

class Representation {
 public:
  /// Throws InvalidInput if `spec` fails the make_spec checks.
  static Representation build(const IdealTriangulation& t, const RepresentationSpec& spec);

  const RepresentationSpec& spec() const { return spec_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dimension() const { return dim_; }

  /// N x N factor matrices (X_i, Y_i) of pair i.
  std::pair<Matrix, Matrix> factor(std::size_t i) const;

  /// Matrix of Z_gamma for basis vector j (order of SymplecticBasis::vectors()).
  const Matrix& generator(std::size_t j) const { return generators_[j]; }
  /// Replaces a generator matrix; used for negative controls.
  void set_generator(std::size_t j, Matrix m);

  /// Coordinates of `a` in the symplectic basis. Throws InternalError if `a`
  /// is outside the lattice span.
  std::vector<std::int64_t> coordinates(std::span<const std::int64_t> a) const;

  /// rho(Z_a) as w^(-2 sum_{u<v} m_u m_v Theta_uv) prod_u rho(Z_gamma_u)^m_u,
  /// with the factors taken in `order` (basis order when empty).
  Matrix evaluate_monomial(std::span<const std::int64_t> a, std::span<const std::size_t> order = {}) const;
  /// Throws ParameterMismatch for an element of another algebra.
  Matrix evaluate(const NumericElement& x) const;

  std::complex<double> zeta(std::span<const std::int64_t> a) const;

 private:
  Representation() = default;

  RepresentationSpec spec_;
  AlgebraPtr algebra_;
  std::size_t dim_ = 1;
  std::vector<IntVector> basis_rows_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> inverses_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::optional<std::size_t> commutant_dimension;
  bool pass() const;
};

enum class CommutantMethod { automatic, gram, spectral };

struct CommutantResult {
  std::optional<std::size_t> dimension;  // empty if the method could not decide
  double gap = 0.0;                       // smallest nonzero scale seen
  std::string method;
};

/// Dimension of { X : [A, X] = 0 for all A in `generators` }.
///   gram     : null space of sum_A C_A^* C_A, C_A = I (x) A - A^T (x) I.
///   spectral : eigenbasis of a random combination of the generators, then
///              connected components of the joint off-diagonal support.
/// `automatic` uses gram up to dimension 32.
CommutantResult commutant_dimension(const std::vector<Matrix>& generators, CommutantMethod method = CommutantMethod::automatic,
                                    std::uint64_t seed = 0, double tolerance = 1e-9);

/// Checks (a) commutation phases, (b) rho(Z_a)^N = zeta(a) Id, (c) rho(H_k) =
/// h_k Id, (d) commutant dimension 1.
VerificationReport verify(const Representation& rep, double tolerance = 1e-9,
                          CommutantMethod method = CommutantMethod::automatic);

/// rho(F(Z_a)) = zeta(a) Id for every basis vector and for `random_count`
/// random lattice vectors.
VerificationReport frobenius_compat(const Representation& rep, double tolerance = 1e-9, std::uint64_t seed = 0,
                                    std::size_t random_count = 10);

/// The N candidates p with T_N(p) = -trace_value.
std::vector<std::complex<double>> puncture_invariants(std::complex<double> trace_value, int N);

}  // namespace ttcf
