#pragma once

// Composite 8-point Gauss-Legendre on panel meshes.  Runs of equal-width
// adjacent panels are evaluated through a grid callback (one equispaced grid
// per node index), so the zeta multi-evaluation kernel can serve them.

#include <functional>
#include <vector>

#include "zdl/eval.hpp"

namespace zdl::quad {

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
};

using GridFn = std::function<std::vector<Complex>(const GridSpec&)>;
using PointFn = std::function<Complex(double)>;

// Mesh of [a, b] with panels of width about h, graded geometrically down to
// width `fine` next to each focus point lying in [a, b].
std::vector<Panel> graded_mesh(double a, double b, double h,
                               const std::vector<double>& focus, double fine);

// Integral of f over the union of panels.  Runs of at least kMinGridRun
// equal panels go through grid_fn, everything else through point_fn.
Complex integrate(const std::vector<Panel>& panels, const GridFn& grid_fn,
                  const PointFn& point_fn);

inline constexpr std::size_t kMinGridRun = 16;

}  // namespace zdl::quad
