#include "moshlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace moshlab {

namespace {

void check_axis(const Axis& a, const char* name) {
  if (a.count < 1) throw std::invalid_argument(std::string("grid: ") + name + " count must be >= 1");
  if (!std::isfinite(a.min) || !std::isfinite(a.max))
    throw std::invalid_argument(std::string("grid: ") + name + " range must be finite");
  if (a.max < a.min) throw std::invalid_argument(std::string("grid: ") + name + " range is not ordered");
  if (a.count > 1 && a.max == a.min)
    throw std::invalid_argument(std::string("grid: ") + name + " range is empty but count > 1");
}

void check_total(std::size_t a, std::size_t b) {
  if (a > GridSpec::kMaxPoints / b) throw std::invalid_argument("grid: more than 1e8 points requested");
}

}  // namespace

void GridSpec::validate(bool evolution) const {
  check_axis(x, "x");
  check_axis(t, "t");
  check_total(x.count, t.count);
  if (evolution && !(t.min > 0.0)) throw std::invalid_argument("grid: evolution grids need t_min > 0");
}

void PhaseSpaceGrid::validate() const {
  check_axis(x, "x");
  check_axis(p, "p");
  check_total(x.count, p.count);
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::density: return "density";
    case Quantity::classical_density: return "classical_density";
    case Quantity::wigner: return "wigner";
  }
  return "unknown";
}

std::vector<double> FieldFrame::row(std::size_t r) const {
  const auto first = values.begin() + static_cast<std::ptrdiff_t>(r * x.count);
  return {first, first + static_cast<std::ptrdiff_t>(x.count)};
}

void FieldFrame::check() const {
  if (values.size() != x.count * y.count) throw std::logic_error("frame: value count does not match axes");
  for (double v : values)
    if (!std::isfinite(v)) throw std::logic_error("frame: non-finite value");
}

}  // namespace moshlab
