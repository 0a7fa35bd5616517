#pragma once

#include <stdexcept>
#include <utility>

namespace shadowlab {

/// Panel count used for normalization and moment checks; a periodic smooth
/// integrand converges far faster than the rule's generic order, so this is
/// a comfortable fixed default.
inline constexpr int kDefaultQuadraturePanels = 4096;

/// Composite Simpson rule over [a, b] with `panels` subintervals.
/// Requires an even panel count. Nodes are accumulated left to right in a
/// fixed order, so results are reproducible.
template <class F>
double composite_simpson(F&& f, double a, double b, int panels) {
  if (panels < 2 || panels % 2 != 0)
    throw std::invalid_argument("composite_simpson: panels must be even and >= 2");
  const double h = (b - a) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; i += 2) odd += f(a + i * h);
  for (int i = 2; i < panels; i += 2) even += f(a + i * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

}  // namespace shadowlab
