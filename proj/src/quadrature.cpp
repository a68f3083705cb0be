#include "moshlab/quadrature.hpp"

namespace moshlab::quadrature {

std::vector<double> uniform_breakpoints(double a, double b, std::size_t panels) {
  if (panels == 0) panels = 1;
  std::vector<double> pts(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  pts.back() = b;
  return pts;
}

}  // namespace moshlab::quadrature
