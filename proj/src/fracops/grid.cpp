#include "fracvoigt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracvoigt/errors.hpp"

namespace fracvoigt {

Grid::Grid(double t_end, int n) : t_end_(t_end), n_(n) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("grid end time must be positive and finite");
  }
  if (n < 1) {
    throw DomainError("grid needs at least one interval, got n = " + std::to_string(n));
  }
}

double Grid::point(int i) const noexcept {
  if (i == n_) {
    return t_end_;
  }
  return t_end_ * static_cast<double>(i) / static_cast<double>(n_);
}

std::vector<double> Grid::points() const {
  std::vector<double> t(size());
  for (int i = 0; i <= n_; ++i) {
    t[static_cast<std::size_t>(i)] = point(i);
  }
  return t;
}

Signal::Signal(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw DomainError("signal has " + std::to_string(values_.size()) + " samples, grid needs " +
                      std::to_string(grid_.size()));
  }
  const auto bad = std::find_if(values_.begin(), values_.end(),
                                [](double v) { return !std::isfinite(v); });
  if (bad != values_.end()) {
    throw DomainError("signal sample " + std::to_string(bad - values_.begin()) +
                      " is not finite");
  }
}

Signal Signal::zeros(const Grid& grid) { return Signal(grid, std::vector<double>(grid.size())); }

double sup_distance(const Signal& a, const Signal& b) {
  if (!(a.grid() == b.grid())) {
    throw DomainError("signals live on different grids");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

double sup_norm(const Signal& a) {
  double d = 0.0;
  for (double v : a.values()) {
    d = std::max(d, std::abs(v));
  }
  return d;
}

Signal linear_combination(double a, const Signal& x, double b, const Signal& y) {
  if (!(x.grid() == y.grid())) {
    throw DomainError("signals live on different grids");
  }
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a * x[i] + b * y[i];
  }
  return Signal(x.grid(), std::move(v));
}

}  // namespace fracvoigt
