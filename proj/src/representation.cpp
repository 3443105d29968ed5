#include "ttcf/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "ttcf/chebyshev.hpp"
#include "ttcf/errors.hpp"

namespace ttcf {

namespace {

// Dense matrices only; N^(3g+s-3) beyond this is out of reach anyway.
constexpr std::size_t kMaxDimension = 2048;

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double scalar_deviation(const Matrix& m, std::complex<double> c) {
  const Matrix diff = m - c * Matrix::Identity(m.rows(), m.cols());
  return max_abs(diff) / std::max(1.0, std::abs(c));
}

Matrix matrix_power(const Matrix& base, std::int64_t e) {
  Matrix result = Matrix::Identity(base.rows(), base.cols());
  Matrix b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

WeightSystem combine(const IntMatrix& u, std::size_t row, const std::vector<WeightSystem>& basis, std::size_t nb) {
  IntVector acc(nb, 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Int& c = u(row, k);
    if (c == 0) continue;
    for (std::size_t b = 0; b < nb; ++b) acc[b] += c * basis[k][b];
  }
  return to_int64_vector(acc);
}

std::size_t int_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > kMaxDimension) break;
    r *= base;
  }
  return r;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<WeightSystem> SymplecticBasis::vectors() const {
  std::vector<WeightSystem> out;
  out.insert(out.end(), alpha.begin(), alpha.end());
  out.insert(out.end(), beta.begin(), beta.end());
  out.insert(out.end(), eta.begin(), eta.end());
  return out;
}

SymplecticBasis symplectic_basis(const IdealTriangulation& t) {
  const TrainTrack tau = from_triangulation(t);
  const std::vector<WeightSystem> lattice = weight_lattice_basis(tau);
  const NormalForm nf = skew_normal_form(theta_matrix(tau, lattice));
  const std::size_t nb = tau.branch_count();
  const std::size_t m = nf.invariants.size();

  SymplecticBasis sb;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Int& d = nf.invariants[i];
    if (d != 1 && d != 2) throw InternalError("normal form block with d = " + d.str());
    if (d == 1) ++ones;
    sb.d.push_back(d == 1 ? 1 : 2);
    sb.alpha.push_back(combine(nf.transform, 2 * i, lattice, nb));
    sb.beta.push_back(combine(nf.transform, 2 * i + 1, lattice, nb));
  }
  const auto g = static_cast<std::size_t>(t.genus());
  const std::size_t s = t.puncture_count();
  if (ones != g || m != 3 * g + s - 3) throw InternalError("normal form does not match the surface");

  // Swap the kernel rows for the puncture weights, which span the same lattice.
  std::vector<IntVector> kernel, etas;
  for (std::size_t r = 2 * m; r < lattice.size(); ++r) kernel.push_back(to_int_vector(combine(nf.transform, r, lattice, nb)));
  for (std::size_t k = 0; k < s; ++k) {
    sb.eta.push_back(puncture_weight(t, k));
    etas.push_back(to_int_vector(sb.eta.back()));
  }
  if (kernel.size() != s || !lattice_equal(kernel, etas))
    throw InternalError("kernel of Theta differs from the puncture lattice");
  return sb;
}

std::complex<double> principal_root(std::complex<double> z, int n) {
  return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
}

RepresentationSpec make_spec(const IdealTriangulation& t, const AlgebraParams& params,
                             std::vector<std::complex<double>> zeta, std::vector<std::complex<double>> h,
                             double tolerance) {
  if (!params.omega) throw InvalidInput("representation needs a concrete omega");
  AlgebraParams::numeric(params.N, *params.omega);
  RepresentationSpec spec{params, symplectic_basis(t), std::move(zeta), std::move(h)};
  const std::size_t m = spec.basis.pairs(), s = spec.basis.eta.size();
  if (spec.zeta.size() != 2 * m + s)
    throw InvalidInput("zeta needs " + std::to_string(2 * m + s) + " values, got " + std::to_string(spec.zeta.size()));
  if (spec.h.size() != s)
    throw InvalidInput("h needs " + std::to_string(s) + " values, got " + std::to_string(spec.h.size()));
  for (std::size_t j = 0; j < spec.zeta.size(); ++j)
    if (spec.zeta[j] == 0.0) throw InvalidInput("zeta value " + std::to_string(j) + " is zero");
  for (std::size_t k = 0; k < s; ++k) {
    const std::complex<double> target = spec.zeta[2 * m + k];
    const std::complex<double> hn = std::pow(spec.h[k], params.N);
    if (std::abs(hn - target) > tolerance * std::abs(target))
      throw InvalidInput("h_" + std::to_string(k + 1) + "^N != zeta(eta_" + std::to_string(k + 1) + ")");
  }
  return spec;
}

RepresentationSpec random_spec(const IdealTriangulation& t, const AlgebraParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> branch(0, params.N - 1);
  const SymplecticBasis sb = symplectic_basis(t);
  std::vector<std::complex<double>> zeta, h;
  for (std::size_t j = 0; j < 2 * sb.pairs() + sb.eta.size(); ++j) zeta.push_back(std::polar(1.0, angle(rng)));
  for (std::size_t k = 0; k < sb.eta.size(); ++k) {
    const std::complex<double> z = zeta[2 * sb.pairs() + k];
    h.push_back(principal_root(z, params.N) * std::polar(1.0, 2.0 * std::numbers::pi * branch(rng) / params.N));
  }
  return make_spec(t, params, std::move(zeta), std::move(h));
}

std::complex<double> zeta_of(const RepresentationSpec& spec, const ThetaForm& theta,
                             std::span<const std::int64_t> coordinates) {
  const std::vector<WeightSystem> gamma = spec.basis.vectors();
  if (coordinates.size() != gamma.size()) throw InvalidInput("coordinate vector has the wrong length");
  std::complex<double> value = 1.0;
  std::int64_t twist = 0;
  for (std::size_t u = 0; u < gamma.size(); ++u) {
    if (coordinates[u] == 0) continue;
    value *= std::pow(spec.zeta[u], static_cast<int>(coordinates[u]));
    for (std::size_t v = u + 1; v < gamma.size(); ++v)
      if (coordinates[v] != 0) twist += coordinates[u] * coordinates[v] * theta(gamma[u], gamma[v]);
  }
  if (twist % 2 != 0 && spec.params.epsilon() < 0) value = -value;
  return value;
}

Representation Representation::build(const IdealTriangulation& t, const RepresentationSpec& spec) {
  RepresentationSpec checked = make_spec(t, spec.params, spec.zeta, spec.h);
  Representation rep;
  rep.spec_ = std::move(checked);
  rep.algebra_ = BalancedAlgebra::create(t, rep.spec_.params);
  const std::size_t m = rep.spec_.basis.pairs();
  const auto N = static_cast<std::size_t>(rep.spec_.params.N);
  rep.dim_ = int_power(N, m);
  if (rep.dim_ > kMaxDimension)
    throw InvalidInput("representation dimension N^" + std::to_string(m) + " is too large for dense matrices");

  for (const WeightSystem& v : rep.spec_.basis.vectors()) rep.basis_rows_.push_back(to_int_vector(v));

  std::vector<Matrix> xs, ys;
  for (std::size_t i = 0; i < m; ++i) {
    auto [x, y] = rep.factor(i);
    const std::size_t left = int_power(N, i), right = int_power(N, m - i - 1);
    const Matrix il = Matrix::Identity(static_cast<Eigen::Index>(left), static_cast<Eigen::Index>(left));
    const Matrix ir = Matrix::Identity(static_cast<Eigen::Index>(right), static_cast<Eigen::Index>(right));
    xs.push_back(Eigen::kroneckerProduct(il, Eigen::kroneckerProduct(x, ir).eval()).eval());
    ys.push_back(Eigen::kroneckerProduct(il, Eigen::kroneckerProduct(y, ir).eval()).eval());
  }
  const auto d = static_cast<Eigen::Index>(rep.dim_);
  rep.generators_ = xs;
  rep.generators_.insert(rep.generators_.end(), ys.begin(), ys.end());
  for (const auto& hk : rep.spec_.h) rep.generators_.push_back(hk * Matrix::Identity(d, d));
  for (const Matrix& g : rep.generators_) rep.inverses_.push_back(g.inverse());
  return rep;
}

std::pair<Matrix, Matrix> Representation::factor(std::size_t i) const {
  const int N = spec_.params.N;
  const std::size_t m = spec_.basis.pairs();
  const std::complex<double> ra = principal_root(spec_.zeta[i], N);
  const std::complex<double> rb = principal_root(spec_.zeta[m + i], N);
  Matrix x = Matrix::Zero(N, N), y = Matrix::Zero(N, N);
  // Basis v_1..v_N stored at indices 0..N-1; v_(N+1) = v_1.
  for (int j = 1; j <= N; ++j) {
    x(j - 1, j - 1) = ra * spec_.params.root_power(4 * static_cast<std::int64_t>(spec_.basis.d[i]) * j);
    y(j % N, j - 1) = rb;
  }
  return {x, y};
}

void Representation::set_generator(std::size_t j, Matrix m) {
  if (m.rows() != static_cast<Eigen::Index>(dim_) || m.cols() != static_cast<Eigen::Index>(dim_))
    throw InvalidInput("generator matrix has the wrong size");
  inverses_[j] = m.inverse();
  generators_[j] = std::move(m);
}

std::vector<std::int64_t> Representation::coordinates(std::span<const std::int64_t> a) const {
  const auto sol = solve_in_lattice(basis_rows_, to_int_vector(a));
  if (!sol) throw InternalError("weight system outside the span of the symplectic basis");
  return to_int64_vector(*sol);
}

Matrix Representation::evaluate_monomial(std::span<const std::int64_t> a, std::span<const std::size_t> order) const {
  const std::vector<std::int64_t> m = coordinates(a);
  const std::size_t n = m.size();
  std::vector<std::size_t> idx(order.begin(), order.end());
  if (idx.empty()) {
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
  }
  std::vector<bool> seen(n, false);
  bool permutation = idx.size() == n;
  for (std::size_t i : idx) {
    if (!permutation) break;
    permutation = i < n && !seen[i];
    if (permutation) seen[i] = true;
  }
  if (!permutation) throw InvalidInput("factor order must list every basis vector once");

  const std::vector<WeightSystem> gamma = spec_.basis.vectors();
  const ThetaForm& theta = algebra_->theta();
  std::int64_t phase = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (m[idx[u]] == 0) continue;
    for (std::size_t v = u + 1; v < n; ++v)
      if (m[idx[v]] != 0) phase -= 2 * m[idx[u]] * m[idx[v]] * theta(gamma[idx[u]], gamma[idx[v]]);
  }
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix result = spec_.params.root_power(phase) * Matrix::Identity(d, d);
  for (std::size_t u : idx) {
    if (m[u] > 0) result = result * matrix_power(generators_[u], m[u]);
    if (m[u] < 0) result = result * matrix_power(inverses_[u], -m[u]);
  }
  return result;
}

Matrix Representation::evaluate(const NumericElement& x) const {
  if (!x.algebra()->same_algebra(*algebra_)) throw ParameterMismatch("element belongs to a different algebra");
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix out = Matrix::Zero(d, d);
  for (const auto& [a, c] : x.terms()) out += c * evaluate_monomial(a);
  return out;
}

std::complex<double> Representation::zeta(std::span<const std::int64_t> a) const {
  return zeta_of(spec_, algebra_->theta(), coordinates(a));
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CommutantResult commutant_dimension(const std::vector<Matrix>& generators, CommutantMethod method, std::uint64_t seed,
                                    double tolerance) {
  CommutantResult res;
  if (generators.empty()) throw InvalidInput("commutant of an empty generator set");
  const Eigen::Index d = generators.front().rows();
  if (method == CommutantMethod::automatic) method = d <= 32 ? CommutantMethod::gram : CommutantMethod::spectral;
  if (d == 1) {
    res.dimension = 1;
    res.method = method == CommutantMethod::gram ? "gram" : "spectral";
    return res;
  }

  if (method == CommutantMethod::gram) {
    res.method = "gram";
    const Matrix id = Matrix::Identity(d, d);
    Matrix gram = Matrix::Zero(d * d, d * d);
    for (const Matrix& a : generators) {
      // Column-major vec: vec(AX - XA) = (I (x) A - A^T (x) I) vec(X).
      const Matrix c = Eigen::kroneckerProduct(id, a).eval() - Eigen::kroneckerProduct(a.transpose(), id).eval();
      gram.noalias() += c.adjoint() * c;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double threshold = tolerance * std::max(1.0, ev.maxCoeff());
    std::size_t null = 0;
    res.gap = ev.maxCoeff();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) <= threshold) ++null;
      else res.gap = std::min(res.gap, ev(i));
    }
    res.dimension = null;
    return res;
  }

  res.method = "spectral";
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix combo = Matrix::Zero(d, d);
  for (const Matrix& a : generators) combo += std::complex<double>(normal(rng), normal(rng)) * a;
  Eigen::ComplexEigenSolver<Matrix> es(combo);
  if (es.info() != Eigen::Success) return res;
  const Eigen::VectorXcd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
  res.gap = gap;
  // A repeated eigenvalue leaves the eigenbasis undetermined.
  if (gap < 1e-6 * scale) return res;
  const Matrix& v = es.eigenvectors();
  const Matrix vinv = v.inverse();
  DisjointSets sets(static_cast<std::size_t>(d));
  std::size_t components = static_cast<std::size_t>(d);
  for (const Matrix& a : generators) {
    const Matrix b = vinv * a * v;
    const double cut = 1e-6 * std::max(1.0, max_abs(b));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        if (i != j && std::abs(b(i, j)) > cut && sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
          --components;
  }
  res.dimension = components;
  return res;
}

VerificationReport verify(const Representation& rep, double tolerance, CommutantMethod method) {
  VerificationReport report;
  const std::vector<WeightSystem> gamma = rep.spec().basis.vectors();
  const ThetaForm& theta = rep.algebra()->theta();
  const AlgebraParams& p = rep.spec().params;
  const std::size_t n = gamma.size();
  const std::size_t m = rep.spec().basis.pairs();

  CheckResult a{"commutation", true, 0.0, ""};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Matrix& gu = rep.generator(u);
      const Matrix& gv = rep.generator(v);
      const Matrix rhs = p.root_power(4 * theta(gamma[u], gamma[v])) * (gv * gu);
      const double dev = max_abs(gu * gv - rhs) / std::max(1.0, max_abs(rhs));
      if (dev > a.max_deviation) {
        a.max_deviation = dev;
        a.detail = "basis pair (" + std::to_string(u) + ", " + std::to_string(v) + ")";
      }
    }
  }
  a.pass = a.max_deviation <= tolerance;
  report.checks.push_back(a);

  CheckResult b{"central_powers", true, 0.0, ""};
  for (std::size_t j = 0; j < n; ++j) {
    const double dev = scalar_deviation(matrix_power(rep.generator(j), p.N), rep.spec().zeta[j]);
    if (dev > b.max_deviation) {
      b.max_deviation = dev;
      b.detail = "basis vector " + std::to_string(j);
    }
  }
  b.pass = b.max_deviation <= tolerance;
  report.checks.push_back(b);

  CheckResult c{"puncture_scalars", true, 0.0, ""};
  for (std::size_t k = 0; k < rep.spec().h.size(); ++k) {
    const double dev = scalar_deviation(rep.evaluate_monomial(gamma[2 * m + k]), rep.spec().h[k]);
    if (dev > c.max_deviation) {
      c.max_deviation = dev;
      c.detail = "puncture " + std::to_string(k + 1);
    }
  }
  c.pass = c.max_deviation <= tolerance;
  report.checks.push_back(c);

  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(rep.generator(j));
  const CommutantResult cr = commutant_dimension(gens, method, 0, tolerance);
  report.commutant_dimension = cr.dimension;
  CheckResult dcheck{"irreducible", cr.dimension == std::optional<std::size_t>(1), 0.0, ""};
  dcheck.detail = cr.method + " method, commutant dimension " +
                  (cr.dimension ? std::to_string(*cr.dimension) : std::string("undetermined"));
  report.checks.push_back(dcheck);
  return report;
}

VerificationReport frobenius_compat(const Representation& rep, double tolerance, std::uint64_t seed,
                                    std::size_t random_count) {
  VerificationReport report;
  const AlgebraPtr iota = rep.algebra()->at_iota();
  const std::vector<WeightSystem> gamma = rep.spec().basis.vectors();
  const int N = rep.spec().params.N;

  auto image = [&](const WeightSystem& a) {
    return rep.evaluate(frobenius(monomial<std::complex<double>>(iota, a), rep.algebra()));
  };

  CheckResult basis{"frobenius_basis", true, 0.0, ""};
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    const double dev = scalar_deviation(image(gamma[j]), rep.spec().zeta[j]);
    if (dev > basis.max_deviation) {
      basis.max_deviation = dev;
      basis.detail = "basis vector " + std::to_string(j);
    }
  }
  basis.pass = basis.max_deviation <= tolerance;
  report.checks.push_back(basis);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::size_t nb = rep.algebra()->track().branch_count();
  CheckResult random{"frobenius_random", true, 0.0, ""};
  CheckResult direct{"frobenius_power", true, 0.0, ""};
  for (std::size_t r = 0; r < random_count; ++r) {
    std::vector<std::int64_t> m(gamma.size());
    WeightSystem a(nb, 0);
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      m[j] = coef(rng);
      for (std::size_t b = 0; b < nb; ++b) a[b] += m[j] * gamma[j][b];
    }
    const Matrix f = image(a);
    const double dev = scalar_deviation(f, zeta_of(rep.spec(), rep.algebra()->theta(), m));
    random.max_deviation = std::max(random.max_deviation, dev);
    const Matrix pw = matrix_power(rep.evaluate_monomial(a), N);
    direct.max_deviation = std::max(direct.max_deviation, max_abs(f - pw) / std::max(1.0, max_abs(pw)));
  }
  random.pass = random.max_deviation <= tolerance;
  direct.pass = direct.max_deviation <= tolerance;
  random.detail = direct.detail = std::to_string(random_count) + " random lattice vectors";
  report.checks.push_back(random);
  report.checks.push_back(direct);
  return report;
}

std::vector<std::complex<double>> puncture_invariants(std::complex<double> trace_value, int N) {
  if (N < 1 || N % 2 == 0) throw InvalidInput("N must be an odd positive integer");
  return solve_chebyshev(-trace_value, N);
}

}  // namespace ttcf
