#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rickart/lattice/spectral_family.hpp"
#include "rickart/norm/order_norm.hpp"

namespace rickart {

/// Grid lambda_0 < ... < lambda_m with one sample xi_i in each cell
/// [lambda_{i-1}, lambda_i].
class Partition {
 public:
  Partition(std::vector<double> grid, std::vector<double> samples)
      : grid_(std::move(grid)), samples_(std::move(samples)) {}

  /// Equal cells of width at most `mesh` covering [lo, hi], sampled at midpoints.
  static Partition uniform(double lo, double hi, double mesh) {
    if (!(mesh > 0) || !(hi > lo)) throw Error(ErrorKind::BadPartition, "uniform partition needs lo < hi and mesh > 0");
    const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / mesh - 1e-12));
    const double h = (hi - lo) / static_cast<double>(std::max<std::size_t>(cells, 1));
    std::vector<double> grid, samples;
    for (std::size_t i = 0; i <= std::max<std::size_t>(cells, 1); ++i) grid.push_back(lo + h * static_cast<double>(i));
    grid.back() = hi;
    for (std::size_t i = 1; i < grid.size(); ++i) samples.push_back(0.5 * (grid[i - 1] + grid[i]));
    return {std::move(grid), std::move(samples)};
  }

  /// Uniform partition of [-norm - mesh/2, norm + mesh/2].
  static Partition covering(double norm, double mesh) { return uniform(-norm - 0.5 * mesh, norm + 0.5 * mesh, mesh); }

  /// Splits every cell into `parts` equal children. The child containing the
  /// old sample keeps it; the others take their endpoint nearest the old
  /// sample, so no eigenvalue moves farther from its sample.
  Partition refine(std::size_t parts) const {
    if (parts < 1) throw Error(ErrorKind::BadPartition, "refine needs at least one part");
    std::vector<double> grid{grid_.front()}, samples;
    for (std::size_t i = 1; i < grid_.size(); ++i) {
      const double a = grid_[i - 1], b = grid_[i], xi = samples_[i - 1];
      const double h = (b - a) / static_cast<double>(parts);
      for (std::size_t k = 0; k < parts; ++k) {
        const double lo = a + h * static_cast<double>(k);
        const double hi = k + 1 == parts ? b : a + h * static_cast<double>(k + 1);
        grid.push_back(hi);
        samples.push_back(std::clamp(xi, lo, hi));
      }
    }
    return {std::move(grid), std::move(samples)};
  }

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }

  double mesh() const {
    double m = 0;
    for (std::size_t i = 1; i < grid_.size(); ++i) m = std::max(m, grid_[i] - grid_[i - 1]);
    return m;
  }

  /// Throws BadPartition unless the grid is strictly increasing, has one
  /// sample per cell, and every sample lies in its cell.
  void validate() const {
    if (grid_.size() < 2) throw Error(ErrorKind::BadPartition, "grid: needs at least two points");
    if (samples_.size() + 1 != grid_.size())
      throw Error(ErrorKind::BadPartition, "samples: expected " + std::to_string(grid_.size() - 1));
    for (std::size_t i = 1; i < grid_.size(); ++i) {
      if (!(grid_[i] > grid_[i - 1]))
        throw Error(ErrorKind::BadPartition, "grid: not strictly increasing at index " + std::to_string(i));
      const double xi = samples_[i - 1];
      if (!(xi >= grid_[i - 1] && xi <= grid_[i]))
        throw Error(ErrorKind::BadPartition, "samples: xi_" + std::to_string(i) + " outside its cell");
    }
  }

 private:
  std::vector<double> grid_;
  std::vector<double> samples_;
};

template <class E>
struct Reconstruction {
  E approx;
  double error = 0;  // order_norm(x - approx)
  double mesh = 0;
};

namespace detail {

template <RoStarElement E, class SublevelFn>
Reconstruction<E> riemann_sum(const E& x, const Partition& p, double min_spec, double max_spec, SublevelFn&& e_of,
                              const Tolerance& tol) {
  p.validate();
  const auto& grid = p.grid();
  if (!(grid.front() < min_spec))
    throw Error(ErrorKind::BadPartition, "grid: lambda_0 must lie below the spectrum minimum");
  if (!(grid.back() > max_spec))
    throw Error(ErrorKind::BadPartition, "grid: lambda_m must lie above the spectrum maximum");
  E approx = zero_like(x);
  E prev = e_of(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    E cur = e_of(grid[i]);
    approx = approx + p.samples()[i - 1] * (cur - prev);
    prev = std::move(cur);
  }
  const E h = 0.5 * (approx + star(approx));
  return {h, order_norm(x - h, tol), p.mesh()};
}

}  // namespace detail

/// sum_i xi_i (e(lambda_i) - e(lambda_{i-1})) and its order-norm distance to x.
inline Reconstruction<matrix::MatrixElement> riemann_reconstruct(const matrix::MatrixElement& x, const Partition& p,
                                                                 const Tolerance& tol = {}) {
  const auto fam = spectral_family(x, tol);
  return detail::riemann_sum(x, p, fam.min_spectrum(), fam.max_spectrum(),
                             [&](double l) { return fam.at(l); }, tol);
}

/// Function model: sublevel indicators are built directly at each grid
/// point, so tail values between probes are placed in the right cell.
inline Reconstruction<stepfn::StepFunction> riemann_reconstruct(const stepfn::StepFunction& x, const Partition& p,
                                                                const Tolerance& tol = {}) {
  if (!is_bounded(x, tol)) throw Error(ErrorKind::NotBounded, "riemann_reconstruct requires a bounded element");
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "riemann_reconstruct requires x* = x");
  double lo = x.default_value().real(), hi = lo;
  for (auto v : stepfn::probe_values(x, tol.probe_count)) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  return detail::riemann_sum(x, p, lo, hi, [&](double l) { return stepfn::strict_sublevel(x, l); }, tol);
}

}  // namespace rickart
