#pragma once

// Normalized Chebyshev polynomials: T_0 = 2, T_1 = x, T_(n+1) = x T_n - T_(n-1),
// so that T_n(a + 1/a) = a^n + a^-n.

#include <complex>
#include <vector>

#include "ttcf/lattice.hpp"

namespace ttcf {

/// Coefficients of T_n, constant term first. Throws InvalidInput for n < 0.
std::vector<Int> chebyshev(int n);

std::complex<double> chebyshev_eval(int n, std::complex<double> x);

/// The n solutions x = a + 1/a of T_n(x) = y, one for each n-th root a of a
/// fixed root b of b + 1/b = y. Throws InvalidInput for n < 1.
std::vector<std::complex<double>> solve_chebyshev(std::complex<double> y, int n);

}  // namespace ttcf
