#include "zdl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace zdl::quad {

namespace {

constexpr std::array<double, 8> kNode = {
    -0.9602898564975362316835609, -0.7966664774136267395915539,
    -0.5255324099163289858177390, -0.1834346424956498049394761,
    0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr std::array<double, 8> kWeight = {
    0.1012285362903762591525314, 0.2223810344533744705443560,
    0.3137066458778872873379622, 0.3626837833783619829651504,
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

// Panels covering [p, q]; graded towards p and/or q when flagged.
void piece(double p, double q, double h, double fine, bool grade_lo, bool grade_hi,
           std::vector<Panel>& out) {
  std::vector<Panel> left;
  std::vector<Panel> right;
  double a = p;
  double b = q;
  if (grade_lo) {
    for (double w = fine; w < h && a + w < b; w *= 2.0) {
      left.push_back({a, a + w});
      a += w;
    }
  }
  if (grade_hi) {
    for (double w = fine; w < h && b - w > a; w *= 2.0) {
      right.push_back({b - w, b});
      b -= w;
    }
  }
  for (const Panel& x : left) out.push_back(x);
  if (b > a) {
    const auto m = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((b - a) / h)));
    const double w = (b - a) / static_cast<double>(m);
    for (std::int64_t k = 0; k < m; ++k)
      out.push_back({a + static_cast<double>(k) * w,
                     k + 1 == m ? b : a + static_cast<double>(k + 1) * w});
  }
  for (auto it = right.rbegin(); it != right.rend(); ++it) out.push_back(*it);
}

}  // namespace

std::vector<Panel> graded_mesh(double a, double b, double h,
                               const std::vector<double>& focus, double fine) {
  require(a < b && h > 0.0 && fine > 0.0, ErrorKind::input_domain,
          "graded_mesh: requires a < b, h > 0, fine > 0");
  std::vector<double> cuts;
  for (double f : focus)
    if (f >= a && f <= b) cuts.push_back(f);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> pts{a};
  for (double c : cuts)
    if (c > pts.back()) pts.push_back(c);
  if (b > pts.back()) pts.push_back(b);
  auto is_focus = [&](double x) {
    return std::find(cuts.begin(), cuts.end(), x) != cuts.end();
  };
  std::vector<Panel> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    piece(pts[i], pts[i + 1], h, fine, is_focus(pts[i]), is_focus(pts[i + 1]), out);
  return out;
}

Complex integrate(const std::vector<Panel>& panels, const GridFn& grid_fn,
                  const PointFn& point_fn) {
  Complex total{};
  std::size_t i = 0;
  while (i < panels.size()) {
    const double w = panels[i].hi - panels[i].lo;
    std::size_t j = i + 1;
    while (j < panels.size() &&
           std::abs((panels[j].hi - panels[j].lo) - w) <= 1e-12 * w &&
           std::abs(panels[j].lo - panels[j - 1].hi) <= 1e-12 * std::max(1.0, std::abs(w)))
      ++j;
    const std::size_t run = j - i;
    if (run >= kMinGridRun) {
      for (std::size_t q = 0; q < kNode.size(); ++q) {
        GridSpec g{panels[i].lo + 0.5 * w * (1.0 + kNode[q]), w,
                   static_cast<std::int64_t>(run)};
        const auto v = grid_fn(g);
        Complex s{};
        for (const Complex& z : v) s += z;
        total += 0.5 * w * kWeight[q] * s;
      }
    } else {
      for (std::size_t k = i; k < j; ++k) {
        const double lo = panels[k].lo;
        const double pw = panels[k].hi - lo;
        Complex s{};
        for (std::size_t q = 0; q < kNode.size(); ++q)
          s += kWeight[q] * point_fn(lo + 0.5 * pw * (1.0 + kNode[q]));
        total += 0.5 * pw * s;
      }
    }
    i = j;
  }
  return total;
}

}  // namespace zdl::quad
