#pragma once

#include <cstddef>
#include <vector>

namespace wmorse {

// A function sampled on a uniform grid together with its first derivative.
struct GridFunction {
  double x0 = 0.0;
  double dx = 0.0;
  std::vector<double> values;
  std::vector<double> derivs;

  std::size_t size() const { return values.size(); }
  double x_at(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
};

}  // namespace wmorse
