#include "ttcf/lattice.hpp"

#include <algorithm>
#include <utility>

#include "ttcf/errors.hpp"

namespace ttcf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// Quotient rounded toward negative infinity.
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[target] += c * row[src]
void add_row(IntMatrix& m, std::size_t target, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += c * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm f{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = f.hermite;
  IntMatrix& t = f.transform;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    // Euclid on the column below row r.
    while (true) {
      std::size_t best = SIZE_MAX;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, col) != 0 && (best == SIZE_MAX || abs(h(i, col)) < abs(h(best, col)))) best = i;
      }
      if (best == SIZE_MAX) break;
      swap_rows(h, r, best);
      swap_rows(t, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const Int q = floor_div(h(i, col), h(r, col));
        add_row(h, i, r, -q);
        add_row(t, i, r, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      negate_row(t, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, col), h(r, col));
      add_row(h, i, r, -q);
      add_row(t, i, r, -q);
    }
    f.pivots.push_back(col);
    ++r;
  }
  f.rank = r;
  return f;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  // Rows of the transform that annihilate a^T span the kernel; the transform
  // is unimodular, so they form a Z-basis of it.
  const HermiteForm f = hermite_normal_form(a.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = f.rank; i < f.transform.rows(); ++i) rows.push_back(f.transform.row(i));
  if (rows.empty()) return rows;
  const HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(rows, a.cols()));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < canon.rank; ++i) basis.push_back(canon.hermite.row(i));
  return basis;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

std::size_t common_length(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::optional<std::size_t> len;
  for (const auto* list : {&a, &b}) {
    for (const auto& v : *list) {
      if (len && *len != v.size()) throw InvalidInput("lattice vectors of different dimensions");
      len = v.size();
    }
  }
  return len.value_or(0);
}

std::vector<IntVector> canonical_rows(const std::vector<IntVector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  const HermiteForm f = hermite_normal_form(IntMatrix::from_rows(vs, dim));
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < f.rank; ++i) rows.push_back(f.hermite.row(i));
  return rows;
}

}  // namespace

bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  const std::size_t dim = common_length(a, b);
  return canonical_rows(a, dim) == canonical_rows(b, dim);
}

std::optional<IntVector> solve_in_lattice(const std::vector<IntVector>& rows, const IntVector& v) {
  if (rows.empty()) {
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return IntVector{};
    return std::nullopt;
  }
  const std::size_t dim = v.size();
  const HermiteForm f = hermite_normal_form(IntMatrix::from_rows(rows, dim));
  IntVector residual = v;
  IntVector y(rows.size());
  for (std::size_t i = 0; i < f.rank; ++i) {
    const std::size_t p = f.pivots[i];
    const Int& pivot = f.hermite(i, p);
    if (residual[p] % pivot != 0) return std::nullopt;
    y[i] = residual[p] / pivot;
    for (std::size_t j = 0; j < dim; ++j) residual[j] -= y[i] * f.hermite(i, j);
  }
  if (!std::all_of(residual.begin(), residual.end(), [](const Int& x) { return x == 0; })) return std::nullopt;
  IntVector x(rows.size());
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < rows.size(); ++j) x[j] += y[i] * f.transform(i, j);
  }
  return x;
}

SkewForm::SkewForm(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidInput("skew form must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) {
        throw InvalidInput("matrix is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
}

namespace {

// Simultaneous row/column operations M <- E M E^T, U <- E U.
struct Congruence {
  IntMatrix m;
  IntMatrix u;

  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    swap_rows(m, a, b);
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
    swap_rows(u, a, b);
  }
  // index target <- target + c * src
  void add(std::size_t target, std::size_t src, const Int& c) {
    if (c == 0) return;
    add_row(m, target, src, c);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += c * m(i, src);
    add_row(u, target, src, c);
  }
  void negate(std::size_t a) {
    negate_row(m, a);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
    negate_row(u, a);
  }
};

}  // namespace

NormalForm skew_normal_form(const SkewForm& form) {
  const std::size_t n = form.size();
  Congruence c{form.matrix(), IntMatrix::identity(n)};
  IntMatrix& m = c.m;
  NormalForm nf;

  std::size_t k = 0;
  while (k + 1 < n) {
    // Smallest nonzero |m(i,j)| with k <= i < j, first in (row, col) order.
    std::size_t pi = SIZE_MAX, pj = SIZE_MAX;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m(i, j) != 0 && (pi == SIZE_MAX || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == SIZE_MAX) break;
    c.swap(k, pi);
    c.swap(k + 1, pj);
    if (m(k, k + 1) < 0) c.negate(k + 1);
    const Int p = m(k, k + 1);

    bool remainder = false;
    for (std::size_t l = k + 2; l < n; ++l) {
      c.add(l, k + 1, -floor_div(m(k, l), p));
      c.add(l, k, floor_div(m(k + 1, l), p));
      if (m(k, l) != 0 || m(k + 1, l) != 0) remainder = true;
    }
    if (remainder) continue;

    // Fold a non-divisible entry of the remaining block into row k.
    std::size_t fold = SIZE_MAX;
    for (std::size_t a = k + 2; a < n && fold == SIZE_MAX; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (m(a, b) % p != 0) {
          fold = a;
          break;
        }
    if (fold != SIZE_MAX) {
      c.add(k, fold, 1);
      continue;
    }
    nf.invariants.push_back(p);
    k += 2;
  }
  nf.nullity = n - 2 * nf.invariants.size();
  nf.transform = std::move(c.u);
  nf.diagonal = std::move(c.m);
  return nf;
}

std::vector<IntVector> kernel_basis(const SkewForm& m) {
  const NormalForm nf = skew_normal_form(m);
  std::vector<IntVector> rows;
  for (std::size_t i = nf.rank(); i < m.size(); ++i) rows.push_back(nf.transform.row(i));
  return rows;
}

IntVector to_int_vector(std::span<const std::int64_t> v) { return IntVector(v.begin(), v.end()); }

std::vector<std::int64_t> to_int64_vector(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const Int& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
      throw InternalError("integer does not fit in 64 bits: " + x.str());
    }
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

}  // namespace ttcf
