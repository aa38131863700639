#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracvoigt {

// Uniform grid 0 = t_0 < t_1 < ... < t_n = t_end.
class Grid {
 public:
  Grid(double t_end, int n);

  double t_end() const noexcept { return t_end_; }
  int n() const noexcept { return n_; }
  double step() const noexcept { return t_end_ / n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) + 1; }

  // t_i = i * t_end / n, with t_n == t_end exactly.
  double point(int i) const noexcept;
  std::vector<double> points() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double t_end_;
  int n_;
};

// Samples of a real function on a grid.  Values must be finite.
class Signal {
 public:
  Signal(Grid grid, std::vector<double> values);

  // Samples f(t_i).
  template <class F>
  static Signal sample(const Grid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (int i = 0; i <= grid.n(); ++i) {
      v[static_cast<std::size_t>(i)] = f(grid.point(i));
    }
    return Signal(grid, std::move(v));
  }

  static Signal zeros(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// max_i |a_i - b_i|; the signals must share a grid.
double sup_distance(const Signal& a, const Signal& b);
double sup_norm(const Signal& a);

// a*x + b*y on a shared grid.
Signal linear_combination(double a, const Signal& x, double b, const Signal& y);

}  // namespace fracvoigt
