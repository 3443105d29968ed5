#include "ttcf/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "ttcf/errors.hpp"

namespace ttcf {

std::vector<Int> chebyshev(int n) {
  if (n < 0) throw InvalidInput("Chebyshev degree must be non-negative");
  std::vector<Int> prev{2}, cur{0, 1};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    std::vector<Int> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::complex<double> chebyshev_eval(int n, std::complex<double> x) {
  if (n < 0) throw InvalidInput("Chebyshev degree must be non-negative");
  std::complex<double> prev = 2.0, cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    std::complex<double> next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<std::complex<double>> solve_chebyshev(std::complex<double> y, int n) {
  if (n < 1) throw InvalidInput("Chebyshev degree must be at least 1");
  // Take the root of b^2 - y b + 1 = 0 with |b| >= 1; the other root is 1/b
  // and gives the same solution multiset.
  const std::complex<double> disc = std::sqrt(y * y - 4.0);
  std::complex<double> b = (y + disc) / 2.0;
  if (std::abs(b) < 1.0) b = (y - disc) / 2.0;
  const double r = std::pow(std::abs(b), 1.0 / n);
  const double theta = std::arg(b) / n;
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::complex<double> a = std::polar(r, theta + 2.0 * std::numbers::pi * j / n);
    out.push_back(a + 1.0 / a);
  }
  return out;
}

}  // namespace ttcf
