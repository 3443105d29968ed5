#pragma once

// Exact integer linear algebra: Hermite normal form, integer kernels, lattice
// comparison, and the skew (symplectic) normal form of antisymmetric forms.
// Everything runs on arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ttcf {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row-style Hermite normal form: transform * input == hermite, transform is
/// unimodular, the first `rank` rows of hermite are nonzero with strictly
/// increasing pivot columns, pivots are positive and the entries above each
/// pivot lie in [0, pivot).
struct HermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// A Z-basis of { x in Z^cols : a x = 0 }, in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& a);

/// True iff the integer spans of `a` and `b` coincide. Throws InvalidInput
/// if vectors of different lengths are mixed.
bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// Integer coefficients x with sum_i x_i rows[i] == v, if any exist.
std::optional<IntVector> solve_in_lattice(const std::vector<IntVector>& rows, const IntVector& v);

/// Integer antisymmetric matrix.
class SkewForm {
 public:
  /// Throws InvalidInput if the matrix is not square and antisymmetric.
  explicit SkewForm(IntMatrix m);
  const IntMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  IntMatrix m_;
};

/// U * M * U^T == D, with D block diagonal: blocks (0 d_i; -d_i 0) for
/// d_1 | d_2 | ... | d_m ascending, then `nullity` zero rows and columns.
struct NormalForm {
  IntMatrix transform;  // U
  IntMatrix diagonal;   // D
  std::vector<Int> invariants;
  std::size_t nullity = 0;

  std::size_t rank() const { return 2 * invariants.size(); }
};

NormalForm skew_normal_form(const SkewForm& m);

/// Last `nullity` rows of the normal-form transform; a Z-basis of ker M.
std::vector<IntVector> kernel_basis(const SkewForm& m);

IntVector to_int_vector(std::span<const std::int64_t> v);
/// Throws InternalError if an entry does not fit in 64 bits.
std::vector<std::int64_t> to_int64_vector(const IntVector& v);

}  // namespace ttcf
