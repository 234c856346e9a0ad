#pragma once

#include "mmag/common.hpp"

#include <array>

namespace mmag {

// Uniform cell-centered grid over the unit box [0,1]^n, n in {1,2,3}.
// Cell centers sit at x_d = (i_d + 1/2) h with h = 1/N; the same layout is
// used for the periodic unit cell Y and for the sample domain Omega.
struct Grid {
  int n = 1;
  int N = 8;

  Scalar h() const { return 1.0 / N; }

  Index cells() const {
    Index c = 1;
    for (int d = 0; d < n; ++d) c *= N;
    return c;
  }

  Index stride(int d) const {
    Index s = 1;
    for (int k = 0; k < d; ++k) s *= N;
    return s;
  }

  Index flat(int i, int j = 0, int k = 0) const {
    return i + Index(N) * (j + Index(N) * k);
  }

  std::array<int, 3> unflat(Index c) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = 0; d < n; ++d) {
      idx[static_cast<size_t>(d)] = static_cast<int>(c % N);
      c /= N;
    }
    return idx;
  }

  // coordinate of cell center along axis d
  Scalar coord(Index c, int d) const {
    return (static_cast<Scalar>(unflat(c)[static_cast<size_t>(d)]) + 0.5) * h();
  }

  // periodic neighbor in +/- direction along axis d
  Index shift_periodic(Index c, int d, int step) const {
    auto idx = unflat(c);
    int v = idx[static_cast<size_t>(d)] + step;
    v %= N;
    if (v < 0) v += N;
    idx[static_cast<size_t>(d)] = v;
    return flat(idx[0], idx[1], idx[2]);
  }

  bool operator==(const Grid& o) const { return n == o.n && N == o.N; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

// A magnetization sample: unit 3-vectors on a Grid plus a time stamp.
struct MagField {
  Grid grid;
  Field3 m;  // 3 x grid.cells()
  Scalar t = 0.0;

  Scalar max_unit_deviation() const {
    Scalar dev = 0.0;
    for (Index c = 0; c < m.cols(); ++c) dev = std::max(dev, std::abs(m.col(c).norm() - 1.0));
    return dev;
  }

  void renormalize() {
    for (Index c = 0; c < m.cols(); ++c) m.col(c) /= m.col(c).norm();
  }
};

// Per-axis face-centered coefficient samples. Entry c of axis(d) belongs to
// the face between cell c and its +d neighbor; on a Neumann domain the faces
// owned by the last cell layer of axis d are the outer boundary faces.
struct FaceCoeffs {
  Grid grid;
  std::array<ArrayX, 3> axis;

  void resize(const Grid& g) {
    grid = g;
    for (int d = 0; d < g.n; ++d) axis[static_cast<size_t>(d)] = ArrayX::Zero(g.cells());
  }
};

}  // namespace mmag
