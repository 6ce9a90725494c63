#pragma once

// Brute-force lattice oracles for the closed forms in interval_core.
//
// A lattice point counts as consistent with (K, C) when the cell of width
// `step` centred on it (clipped to the unit box) meets the surface
// (1-C) t + C (1-u) p = K. The left-hand side is multilinear, so its range
// over a box is spanned by the corner values. Every consistent cell then
// holds an exactly feasible point, which bounds the oracle error by the
// variation of the measured quantity across one cell, independent of p.
//
// Deliberately self-contained: no calls into the library under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace noisyeval::oracle {

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool found() const { return lo <= hi; }
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

inline double observed(double c, double t, double u, double p) {
  return (1.0 - c) * t + c * (1.0 - u) * p;
}

inline double real(double c, double t, double u) {
  return (1.0 - c) * t + c * u;
}

inline int lattice_size(double step) {
  return static_cast<int>(std::lround(1.0 / step));
}

// Clipped cell [v - step/2, v + step/2] ∩ [0,1].
inline std::array<double, 2> cell(int i, double step) {
  const double v = i * step;
  return {std::max(0.0, v - step / 2), std::min(1.0, v + step / 2)};
}

// Corner values carry rounding error; at the edge of the feasible p range
// the surface touches a single lattice corner.
inline bool meets(double mn, double mx, double k) {
  constexpr double kSlack = 1e-12;
  return mn <= k + kSlack && k - kSlack <= mx;
}

/// Min/max of real accuracy over consistent (t, u) lattice points at a
/// fixed p.
inline Extent real_extent_at_p(double k, double c, double p, double step) {
  const int n = lattice_size(step);
  Extent out;
  for (int i = 0; i <= n; ++i) {
    const auto tc = cell(i, step);
    for (int j = 0; j <= n; ++j) {
      const auto uc = cell(j, step);
      double mn = std::numeric_limits<double>::infinity();
      double mx = -mn;
      for (double t : tc) {
        for (double u : uc) {
          const double v = observed(c, t, u, p);
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      }
      if (meets(mn, mx, k)) out.add(real(c, i * step, j * step));
    }
  }
  return out;
}

struct ParameterExtents {
  Extent t, u, p;
};

/// Per-parameter min/max over consistent (t, u, p) lattice points.
inline ParameterExtents parameter_extents(double k, double c, double step) {
  const int n = lattice_size(step);
  ParameterExtents out;
  for (int i = 0; i <= n; ++i) {
    const auto tc = cell(i, step);
    for (int j = 0; j <= n; ++j) {
      const auto uc = cell(j, step);
      for (int l = 0; l <= n; ++l) {
        const auto pc = cell(l, step);
        double mn = std::numeric_limits<double>::infinity();
        double mx = -mn;
        for (double t : tc) {
          for (double u : uc) {
            for (double p : pc) {
              const double v = observed(c, t, u, p);
              mn = std::min(mn, v);
              mx = std::max(mx, v);
            }
          }
        }
        if (meets(mn, mx, k)) {
          out.t.add(i * step);
          out.u.add(j * step);
          out.p.add(l * step);
        }
      }
    }
  }
  return out;
}

/// Min/max of real accuracy at fixed p over (t, u) lattice points that are
/// consistent AND satisfy u >= u_floor and u <= t, the reasonable-regime
/// constraints.
inline Extent reasonable_extent_at_p(double k, double c, double p,
                                     double u_floor, double step) {
  const int n = lattice_size(step);
  Extent out;
  for (int i = 0; i <= n; ++i) {
    const auto tc = cell(i, step);
    for (int j = 0; j <= n; ++j) {
      const auto uc = cell(j, step);
      // The cell must contain a point with u >= u_floor and u <= t.
      if (uc[1] < u_floor || uc[0] > tc[1]) continue;
      double mn = std::numeric_limits<double>::infinity();
      double mx = -mn;
      for (double t : tc) {
        for (double u : uc) {
          const double v = observed(c, t, u, p);
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      }
      if (meets(mn, mx, k)) out.add(real(c, i * step, j * step));
    }
  }
  return out;
}

}  // namespace noisyeval::oracle
