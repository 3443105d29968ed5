#pragma once

// The balanced Chekhov-Fock algebra Z^w(lambda): finite sums of basis
// monomials Z_a, a in W(tau_lambda; Z), with product
//     Z_a Z_b = w^(2 Theta(a, b)) Z_(a+b).
// Coefficients are either exact integer combinations of powers of a formal
// root w with w^(4N) = 1 (RootPolynomial), or complex numbers evaluated at a
// concrete w.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ttcf/errors.hpp"
#include "ttcf/train_track.hpp"
#include "ttcf/triangulation.hpp"

namespace ttcf {

/// Root-of-unity data: w^4 is a primitive N-th root of unity, N odd. Derived
/// quantities: q = w^4, A = w^-2, epsilon = A^N, iota = w^(N^2).
struct AlgebraParams {
  int N = 1;
  /// Concrete w; absent in purely formal (exact) use.
  std::optional<std::complex<double>> omega;

  /// Throws InvalidInput unless N is odd and positive.
  static AlgebraParams formal(int N);
  /// Throws InvalidInput unless |w| = 1 and w^4 is a primitive N-th root of
  /// unity, both to `tolerance`.
  static AlgebraParams numeric(int N, std::complex<double> omega, double tolerance = 1e-9);

  /// Exponents of w are taken modulo 4N.
  int modulus() const { return 4 * N; }
  /// Parameters of the algebra at iota = w^(N^2): N = 1 and w replaced by iota.
  AlgebraParams iota() const;
  /// epsilon = w^(-2N), rounded to +1 or -1; needs a concrete w.
  int epsilon() const;
  std::complex<double> root_power(std::int64_t k) const;

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b);
};

/// The unit complex w = exp(2 pi i m / 4N) with gcd(m, N) = 1, i.e. all w for
/// which w^4 is a primitive N-th root. epsilon_filter = +1 or -1 keeps only
/// that sign of epsilon = (-1)^m; 0 keeps everything.
std::vector<std::complex<double>> enumerate_omegas(int N, int epsilon_filter = 0);

/// Element of Z[w] / (w^modulus - 1).
class RootPolynomial {
 public:
  RootPolynomial() = default;
  explicit RootPolynomial(int modulus) : c_(static_cast<std::size_t>(modulus), 0) {}
  static RootPolynomial monomial(int modulus, std::int64_t exponent, std::int64_t value = 1);

  int modulus() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;

  RootPolynomial& operator+=(const RootPolynomial& o);
  RootPolynomial& operator-=(const RootPolynomial& o);
  friend RootPolynomial operator+(RootPolynomial a, const RootPolynomial& b) { return a += b; }
  friend RootPolynomial operator-(RootPolynomial a, const RootPolynomial& b) { return a -= b; }
  friend RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b);
  friend bool operator==(const RootPolynomial&, const RootPolynomial&) = default;

  /// Multiplication by w^k.
  RootPolynomial shifted(std::int64_t k) const;
  /// Substitute w -> v^scale where v has the given modulus. Requires
  /// modulus() * scale to be a multiple of new_modulus.
  RootPolynomial substitute(int new_modulus, std::int64_t scale) const;
  std::complex<double> evaluate(std::complex<double> root) const;

 private:
  std::vector<std::int64_t> c_;
};

/// Z^w(lambda) for a fixed triangulation and root of unity.
class BalancedAlgebra {
 public:
  static std::shared_ptr<const BalancedAlgebra> create(const IdealTriangulation& t, const AlgebraParams& params);

  const IdealTriangulation& triangulation() const { return triangulation_; }
  const TrainTrack& track() const { return track_; }
  const ThetaForm& theta() const { return theta_; }
  const AlgebraParams& params() const { return params_; }

  /// The same algebra at iota = w^(N^2).
  std::shared_ptr<const BalancedAlgebra> at_iota() const;
  bool same_algebra(const BalancedAlgebra& other) const;

 private:
  BalancedAlgebra(const IdealTriangulation& t, const AlgebraParams& params);

  IdealTriangulation triangulation_;
  TrainTrack track_;
  ThetaForm theta_;
  AlgebraParams params_;
};

using AlgebraPtr = std::shared_ptr<const BalancedAlgebra>;

template <class C>
struct CoefficientRing;

template <>
struct CoefficientRing<RootPolynomial> {
  static RootPolynomial root_power(const AlgebraParams& p, std::int64_t k) {
    return RootPolynomial::monomial(p.modulus(), k);
  }
  static bool is_zero(const RootPolynomial& c) { return c.is_zero(); }
  static RootPolynomial negate(const RootPolynomial& c) { return RootPolynomial(c.modulus()) - c; }
};

template <>
struct CoefficientRing<std::complex<double>> {
  static std::complex<double> root_power(const AlgebraParams& p, std::int64_t k) { return p.root_power(k); }
  static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }
  static std::complex<double> negate(const std::complex<double>& c) { return -c; }
};

template <class Coeff>
class Element {
 public:
  using Terms = std::map<WeightSystem, Coeff>;

  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static Element identity(AlgebraPtr algebra) {
    Element e(algebra);
    e.terms_.emplace(WeightSystem(algebra->track().branch_count(), 0),
                     CoefficientRing<Coeff>::root_power(algebra->params(), 0));
    return e;
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * Z_a; `a` must already be a valid weight system.
  void add_term(const WeightSystem& a, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) it->second += c;
    if (CoefficientRing<Coeff>::is_zero(it->second)) terms_.erase(it);
  }

  Element& operator+=(const Element& o) {
    require_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, CoefficientRing<Coeff>::negate(c));
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_->same_algebra(*b.algebra_) && a.terms_ == b.terms_;
  }

  void require_same(const Element& o) const {
    if (!algebra_->same_algebra(*o.algebra_)) throw ParameterMismatch("elements of different algebras");
  }

 private:
  AlgebraPtr algebra_;
  Terms terms_;
};

using ExactElement = Element<RootPolynomial>;
using NumericElement = Element<std::complex<double>>;

/// Z_a with coefficient 1. Throws InvalidWeightSystem for an invalid `a`.
template <class Coeff>
Element<Coeff> monomial(const AlgebraPtr& algebra, std::span<const std::int64_t> a) {
  require_weight_system(algebra->track(), a);
  Element<Coeff> e(algebra);
  e.add_term(WeightSystem(a.begin(), a.end()), CoefficientRing<Coeff>::root_power(algebra->params(), 0));
  return e;
}

template <class Coeff>
Element<Coeff> mul(const Element<Coeff>& x, const Element<Coeff>& y) {
  x.require_same(y);
  const AlgebraPtr& alg = x.algebra();
  const std::size_t nb = alg->track().branch_count();
  Element<Coeff> out(alg);
  WeightSystem sum(nb);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      for (std::size_t i = 0; i < nb; ++i) sum[i] = a[i] + b[i];
      // w^(2 Theta) = w^(doubled Theta).
      const std::int64_t phase = alg->theta().doubled(a, b);
      out.add_term(sum, ca * cb * CoefficientRing<Coeff>::root_power(alg->params(), phase));
    }
  }
  return out;
}

template <class Coeff>
Element<Coeff> power(const Element<Coeff>& x, int m) {
  if (m < 0) throw InvalidInput("negative power of an algebra element");
  Element<Coeff> result = Element<Coeff>::identity(x.algebra());
  Element<Coeff> base = x;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

/// Frobenius map Z^iota -> Z^w, Z_a -> Z_(N a). `x` must live in
/// target->at_iota().
ExactElement frobenius(const ExactElement& x, const AlgebraPtr& target);
NumericElement frobenius(const NumericElement& x, const AlgebraPtr& target);

/// Evaluates exact coefficients at the concrete w of `numeric_algebra`.
NumericElement to_numeric(const ExactElement& x, const AlgebraPtr& numeric_algebra);

/// Largest coefficient difference between two numeric elements.
double max_difference(const NumericElement& x, const NumericElement& y);

/// Exponent e, reduced mod `modulus`, with
///   [Z_i1^k_i1 ... Z_in^k_in] = w^e Z_i1^k_i1 ... Z_in^k_in
/// for the generators taken in `order` (identity order when empty):
///   e = -sum_{u<v} k_(i_u) k_(i_v) sigma_(i_u i_v).
/// Throws ParityViolation when k is not balanced.
std::int64_t weyl_exponent(const IdealTriangulation& t, const SigmaMatrix& sigma, std::span<const std::int64_t> k,
                           int modulus, std::span<const std::size_t> order = {});

std::int64_t reduce_mod(std::int64_t value, std::int64_t modulus);

}  // namespace ttcf
