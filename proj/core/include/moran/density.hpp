#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moran/interval_union.hpp"
#include "moran/rational.hpp"
#include "moran/system.hpp"

namespace moran {

// Union of [x, x + R_level] over the atoms x of mu_level. Contains the support
// of mu and shrinks to it as the level grows. Throws std::invalid_argument
// for level == 0.
IntervalUnion support_cover(const MoranSystem& system, std::size_t level);

enum class HistogramMode {
  // Each atom's mass 1/q is spread uniformly over [x, x + R_level], the cover
  // of the sub-measure it carries. Exact for self-affine tails.
  Spread,
  // Point masses binned at the exact atom positions.
  Atoms,
};

struct Histogram {
  Rational lo;  // bounding box [lo, hi]
  Rational hi;
  double bin_width = 0.0;
  std::vector<double> mass;     // per bin, sums to 1
  std::vector<double> density;  // mass / bin_width

  std::size_t bins() const { return mass.size(); }
  double center(std::size_t i) const;
  double total_mass() const;
  // Riemann sum of the density.
  double integral() const;
};

// Density estimate of mu from the exact atoms of mu_level over the box
// [min atom, max atom + R_level]. Throws std::invalid_argument when bins == 0
// or the box is degenerate.
Histogram density_histogram(const MoranSystem& system, std::size_t level, std::size_t bins,
                            HistogramMode mode = HistogramMode::Spread);

// True iff every interior bin with positive value lies within relative
// deviation `tol` of the median of those bins. Interior: both neighbours are
// positive as well, so bins cut by a support endpoint are ignored.
bool uniformity_check(std::span<const double> density, double tol);
bool uniformity_check(const Histogram& histogram, double tol);

struct DensityDiagnostics {
  double empty_fraction = 0.0;   // empty bins between the first and last positive bin
  double relative_stddev = 0.0;  // over positive bins
  double max_density = 0.0;
  // Mass sits on a set much thinner than the bin grid: no bounded density.
  bool singular = false;
};

DensityDiagnostics diagnose(const Histogram& histogram);

struct DensityReport {
  std::size_t level = 0;
  Histogram histogram;
  DensityDiagnostics diagnostics;
  bool full_digit_sets = false;  // Phi(n) == p_n at every level
  bool uniform = false;
  std::string verdict;
};

inline constexpr const char* kNotSpectralByUniformity = "not spectral by uniformity criterion";

// Histogram, diagnostics and uniformity verdict in one pass. The verdict is
// "singular: no bounded density", "uniform on support" or
// kNotSpectralByUniformity.
DensityReport analyze_density(const MoranSystem& system, std::size_t level, std::size_t bins,
                              double uniformity_tol = 0.05,
                              HistogramMode mode = HistogramMode::Spread);

}  // namespace moran
