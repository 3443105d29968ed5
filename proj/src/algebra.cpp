#include "ttcf/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace ttcf {

std::int64_t reduce_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

namespace {

std::complex<double> unit_root(std::int64_t numerator, std::int64_t denominator) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(numerator, denominator)) /
                       static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

void require_odd_order(int N) {
  if (N < 1 || N % 2 == 0) throw InvalidInput("N must be an odd positive integer, got " + std::to_string(N));
}

}  // namespace

AlgebraParams AlgebraParams::formal(int N) {
  require_odd_order(N);
  return AlgebraParams{N, std::nullopt};
}

AlgebraParams AlgebraParams::numeric(int N, std::complex<double> omega, double tolerance) {
  require_odd_order(N);
  if (std::abs(std::abs(omega) - 1.0) > tolerance) throw InvalidInput("omega must have modulus 1");
  // w^4 is a primitive N-th root iff w = exp(2 pi i m / 4N) with gcd(m, N) = 1.
  const double m_real = std::arg(omega) / (2.0 * std::numbers::pi) * 4.0 * N;
  const auto m = static_cast<std::int64_t>(std::llround(m_real));
  if (std::abs(unit_root(m, 4 * N) - omega) > tolerance)
    throw InvalidInput("omega is not a 4N-th root of unity");
  if (std::gcd(reduce_mod(m, 4 * N), static_cast<std::int64_t>(N)) != 1)
    throw InvalidInput("omega^4 is not a primitive N-th root of unity");
  return AlgebraParams{N, omega};
}

AlgebraParams AlgebraParams::iota() const {
  AlgebraParams p{1, std::nullopt};
  if (omega) p.omega = root_power(static_cast<std::int64_t>(N) * N);
  return p;
}

int AlgebraParams::epsilon() const {
  return root_power(-2 * static_cast<std::int64_t>(N)).real() > 0 ? 1 : -1;
}

std::complex<double> AlgebraParams::root_power(std::int64_t k) const {
  if (!omega) throw InvalidInput("numeric evaluation needs a concrete omega");
  // Round the exponent of w so phases stay exact to machine precision.
  const double m_real = std::arg(*omega) / (2.0 * std::numbers::pi) * modulus();
  const auto m = static_cast<std::int64_t>(std::llround(m_real));
  return unit_root(reduce_mod(m * reduce_mod(k, modulus()), modulus()), modulus());
}

bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
  if (a.N != b.N || a.omega.has_value() != b.omega.has_value()) return false;
  return !a.omega || std::abs(*a.omega - *b.omega) < 1e-9;
}

std::vector<std::complex<double>> enumerate_omegas(int N, int epsilon_filter) {
  require_odd_order(N);
  std::vector<std::complex<double>> out;
  for (int m = 0; m < 4 * N; ++m) {
    if (std::gcd(m, N) != 1) continue;
    const int eps = m % 2 == 0 ? 1 : -1;
    if (epsilon_filter != 0 && eps != epsilon_filter) continue;
    out.push_back(unit_root(m, 4 * N));
  }
  return out;
}

RootPolynomial RootPolynomial::monomial(int modulus, std::int64_t exponent, std::int64_t value) {
  RootPolynomial p(modulus);
  p.c_[static_cast<std::size_t>(reduce_mod(exponent, modulus))] = value;
  return p;
}

bool RootPolynomial::is_zero() const {
  for (std::int64_t v : c_)
    if (v != 0) return false;
  return true;
}

RootPolynomial& RootPolynomial::operator+=(const RootPolynomial& o) {
  if (o.c_.size() != c_.size()) throw ParameterMismatch("root polynomials of different modulus");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RootPolynomial& RootPolynomial::operator-=(const RootPolynomial& o) {
  if (o.c_.size() != c_.size()) throw ParameterMismatch("root polynomials of different modulus");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b) {
  if (a.c_.size() != b.c_.size()) throw ParameterMismatch("root polynomials of different modulus");
  const std::size_t m = a.c_.size();
  RootPolynomial out(static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out.c_[(i + j) % m] += a.c_[i] * b.c_[j];
  }
  return out;
}

RootPolynomial RootPolynomial::shifted(std::int64_t k) const {
  const int m = modulus();
  RootPolynomial out(m);
  for (int i = 0; i < m; ++i) out.c_[static_cast<std::size_t>(reduce_mod(i + k, m))] = c_[static_cast<std::size_t>(i)];
  return out;
}

RootPolynomial RootPolynomial::substitute(int new_modulus, std::int64_t scale) const {
  if ((static_cast<std::int64_t>(modulus()) * scale) % new_modulus != 0)
    throw ParameterMismatch("substitution is not well defined modulo the root order");
  RootPolynomial out(new_modulus);
  for (int i = 0; i < modulus(); ++i)
    out.c_[static_cast<std::size_t>(reduce_mod(i * scale, new_modulus))] += c_[static_cast<std::size_t>(i)];
  return out;
}

std::complex<double> RootPolynomial::evaluate(std::complex<double> root) const {
  std::complex<double> sum = 0.0, p = 1.0;
  for (std::int64_t v : c_) {
    sum += static_cast<double>(v) * p;
    p *= root;
  }
  return sum;
}

BalancedAlgebra::BalancedAlgebra(const IdealTriangulation& t, const AlgebraParams& params)
    : triangulation_(t), track_(from_triangulation(t)), theta_(track_), params_(params) {}

AlgebraPtr BalancedAlgebra::create(const IdealTriangulation& t, const AlgebraParams& params) {
  require_odd_order(params.N);
  return AlgebraPtr(new BalancedAlgebra(t, params));
}

AlgebraPtr BalancedAlgebra::at_iota() const { return create(triangulation_, params_.iota()); }

bool BalancedAlgebra::same_algebra(const BalancedAlgebra& other) const {
  if (this == &other) return true;
  if (!(params_ == other.params_)) return false;
  const GluingData& a = triangulation_.gluing_data();
  const GluingData& b = other.triangulation_.gluing_data();
  if (a.triangles != b.triangles || a.gluings.size() != b.gluings.size()) return false;
  for (std::size_t i = 0; i < a.gluings.size(); ++i)
    for (int j = 0; j < 2; ++j)
      if (a.gluings[i][j].triangle != b.gluings[i][j].triangle || a.gluings[i][j].side != b.gluings[i][j].side)
        return false;
  return true;
}

namespace {

void require_frobenius_source(const AlgebraPtr& source, const AlgebraPtr& target) {
  if (!source->same_algebra(*target->at_iota()))
    throw ParameterMismatch("Frobenius source must be the target algebra at iota");
}

WeightSystem scaled(const WeightSystem& a, std::int64_t n) {
  WeightSystem out(a);
  for (auto& v : out) v *= n;
  return out;
}

}  // namespace

ExactElement frobenius(const ExactElement& x, const AlgebraPtr& target) {
  require_frobenius_source(x.algebra(), target);
  const std::int64_t N = target->params().N;
  ExactElement out(target);
  // iota = w^(N^2): a polynomial in iota (mod 4) becomes one in w (mod 4N).
  for (const auto& [a, c] : x.terms()) out.add_term(scaled(a, N), c.substitute(target->params().modulus(), N * N));
  return out;
}

NumericElement frobenius(const NumericElement& x, const AlgebraPtr& target) {
  require_frobenius_source(x.algebra(), target);
  const std::int64_t N = target->params().N;
  NumericElement out(target);
  for (const auto& [a, c] : x.terms()) out.add_term(scaled(a, N), c);
  return out;
}

NumericElement to_numeric(const ExactElement& x, const AlgebraPtr& numeric_algebra) {
  const AlgebraParams& p = numeric_algebra->params();
  if (!p.omega) throw InvalidInput("target algebra has no concrete omega");
  if (x.algebra()->params().N != p.N) throw ParameterMismatch("root orders differ");
  NumericElement out(numeric_algebra);
  for (const auto& [a, c] : x.terms()) out.add_term(a, c.evaluate(*p.omega));
  return out;
}

double max_difference(const NumericElement& x, const NumericElement& y) {
  x.require_same(y);
  double worst = 0.0;
  for (const auto& [a, c] : x.terms()) {
    auto it = y.terms().find(a);
    worst = std::max(worst, std::abs(c - (it == y.terms().end() ? 0.0 : it->second)));
  }
  for (const auto& [a, c] : y.terms())
    if (!x.terms().contains(a)) worst = std::max(worst, std::abs(c));
  return worst;
}

std::int64_t weyl_exponent(const IdealTriangulation& t, const SigmaMatrix& sigma, std::span<const std::int64_t> k,
                           int modulus, std::span<const std::size_t> order) {
  const std::size_t n = t.edge_count();
  if (k.size() != n || sigma.size() != n) throw InvalidInput("edge weight vector has the wrong length");
  for (std::size_t tri = 0; tri < t.triangle_count(); ++tri) {
    std::int64_t s = 0;
    for (std::size_t e : t.triangle_edges(tri)) s += k[e];
    if (s % 2 != 0) throw ParityViolation(tri, "odd edge-weight sum around triangle " + std::to_string(tri));
  }
  std::vector<std::size_t> idx(order.begin(), order.end());
  if (idx.empty()) {
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
  }
  if (idx.size() != n) throw InvalidInput("generator order must list every edge once");
  std::vector<bool> seen(n, false);
  for (std::size_t i : idx) {
    if (i >= n || seen[i]) throw InvalidInput("generator order must list every edge once");
    seen[i] = true;
  }
  std::int64_t e = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t i = idx[u], j = idx[v];
      e = reduce_mod(e - reduce_mod(k[i] * k[j], modulus) * sigma(i, j), modulus);
    }
  return e;
}

}  // namespace ttcf
