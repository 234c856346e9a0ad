#pragma once

#include "mmag/grid.hpp"

#include <array>
#include <complex>

namespace mmag {

using Complex = std::complex<Scalar>;
using ArrayXc = Eigen::ArrayX<Complex>;

// In-place complex FFT along every axis of a flat row-major-by-axis-0 array
// with per-axis lengths dims[0..n-1] (dims[d] may differ per axis).
void fft_nd(ArrayXc& data, const std::array<int, 3>& dims, int n, bool inverse);

// smallest size >= x whose only prime factors are 2, 3, 5
int good_fft_size(int x);

// Exact solve of the compact 5-point operator sum_d abar_d D_d^- D_d^+ u = rhs
// on the periodic grid, normalized to zero mean. rhs must have (numerically)
// zero mean; its mean mode is discarded.
ArrayX poisson_periodic_inverse(const Grid& g, const std::array<Scalar, 3>& abar, const ArrayX& rhs);

// Exact solve of (u - gamma * sum_d abar_d D_d^- D_d^+ u) = rhs with zero-flux
// (Neumann) closure, via even reflection onto the doubled periodic grid.
ArrayX helmholtz_neumann_inverse(const Grid& g, const std::array<Scalar, 3>& abar, Scalar gamma,
                                 const ArrayX& rhs);

// Exact solve of sum_d abar_d D_d^- D_d^+ u = rhs with zero-flux closure and
// zero-mean normalization (mean mode of rhs discarded).
ArrayX poisson_neumann_inverse(const Grid& g, const std::array<Scalar, 3>& abar, const ArrayX& rhs);

// Spectral derivative of a cell-centered sample under even reflection at the
// box faces: order 1 or 2 along a single axis. Mixed derivatives compose two
// order-1 calls.
ArrayX spectral_derivative(const Grid& g, const ArrayX& f, int axis, int order);

}  // namespace mmag
