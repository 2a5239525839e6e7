#include "moran/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "moran/fourier.hpp"

namespace moran {

IntervalUnion support_cover(const MoranSystem& system, std::size_t level) {
  if (level == 0) throw std::invalid_argument("support_cover: level must be >= 1");
  const DiscreteMeasure mu = atoms(system, level);
  const Rational R = system.tail_radius(level);
  std::vector<Interval> pieces;
  pieces.reserve(mu.atoms.size());
  for (const auto& x : mu.atoms) pieces.push_back({x, x + R});
  return IntervalUnion(std::move(pieces));
}

double Histogram::center(std::size_t i) const {
  return to_double(lo) + (static_cast<double>(i) + 0.5) * bin_width;
}

double Histogram::total_mass() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

double Histogram::integral() const {
  return std::accumulate(density.begin(), density.end(), 0.0) * bin_width;
}

Histogram density_histogram(const MoranSystem& system, std::size_t level, std::size_t bins,
                            HistogramMode mode) {
  if (bins == 0) throw std::invalid_argument("density_histogram: bins must be positive");
  const DiscreteMeasure mu = atoms(system, level);
  const Rational R = system.tail_radius(level);

  Histogram h;
  h.lo = mu.atoms.front();
  h.hi = mu.atoms.back() + R;
  if (h.hi <= h.lo) throw std::invalid_argument("density_histogram: degenerate bin width");
  const Rational width = (h.hi - h.lo) / static_cast<unsigned long>(bins);
  h.bin_width = to_double(width);
  h.mass.assign(bins, 0.0);

  const double w = to_double(mu.weight);
  const Rational spread = R / width;  // atom cover length in bin units
  const bool points = mode == HistogramMode::Atoms || R == 0;
  const double span = to_double(spread);
  const long last = static_cast<long>(bins) - 1;

  for (const auto& x : mu.atoms) {
    const Rational u = (x - h.lo) / width;
    const Integer cell = floor(u);
    if (points) {
      const long b = std::min(cell.get_si(), last);
      h.mass[static_cast<std::size_t>(b)] += w;
      continue;
    }
    // [u0, u0 + span) in bin units, u0 = cell + offset.
    long b = cell.get_si();
    double offset = to_double(frac(u));
    double remaining = span;
    while (remaining > 0.0 && b <= last) {
      const double take = std::min(remaining, 1.0 - offset);
      h.mass[static_cast<std::size_t>(b)] += w * take / span;
      remaining -= take;
      offset = 0.0;
      ++b;
    }
  }
  h.density.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) h.density[i] = h.mass[i] / h.bin_width;
  return h;
}

bool uniformity_check(std::span<const double> density, double tol) {
  std::vector<double> interior;
  for (std::size_t i = 1; i + 1 < density.size(); ++i) {
    if (density[i] > 0.0 && density[i - 1] > 0.0 && density[i + 1] > 0.0) {
      interior.push_back(density[i]);
    }
  }
  if (interior.empty()) return true;
  std::vector<double> sorted = interior;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2),
                   sorted.end());
  const double median = sorted[sorted.size() / 2];
  return std::all_of(interior.begin(), interior.end(),
                     [&](double v) { return std::abs(v - median) <= tol * median; });
}

bool uniformity_check(const Histogram& histogram, double tol) {
  return uniformity_check(histogram.density, tol);
}

DensityDiagnostics diagnose(const Histogram& histogram) {
  DensityDiagnostics d;
  const auto& v = histogram.density;
  const auto first = std::find_if(v.begin(), v.end(), [](double x) { return x > 0.0; });
  if (first == v.end()) return d;
  const auto last = std::find_if(v.rbegin(), v.rend(), [](double x) { return x > 0.0; }).base();
  const auto span = static_cast<double>(last - first);
  const auto empty = static_cast<double>(std::count(first, last, 0.0));
  d.empty_fraction = empty / span;

  double sum = 0.0, sum_sq = 0.0, n = 0.0;
  for (auto it = first; it != last; ++it) {
    if (*it <= 0.0) continue;
    sum += *it;
    sum_sq += *it * *it;
    n += 1.0;
    d.max_density = std::max(d.max_density, *it);
  }
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  d.relative_stddev = std::sqrt(var) / mean;
  d.singular = d.empty_fraction > 0.2 || d.relative_stddev > 1.0;
  return d;
}

DensityReport analyze_density(const MoranSystem& system, std::size_t level, std::size_t bins,
                              double uniformity_tol, HistogramMode mode) {
  DensityReport r;
  r.level = level;
  r.histogram = density_histogram(system, level, bins, mode);
  r.diagnostics = diagnose(r.histogram);
  auto full = [](const Level& lv) {
    return static_cast<std::int64_t>(lv.phi()) == lv.p;
  };
  r.full_digit_sets = std::all_of(system.preamble().begin(), system.preamble().end(), full) &&
                      std::all_of(system.cycle().begin(), system.cycle().end(), full);
  r.uniform = uniformity_check(r.histogram, uniformity_tol);
  if (r.diagnostics.singular) {
    r.verdict = "singular: no bounded density";
  } else if (r.uniform) {
    r.verdict = "uniform on support";
  } else {
    r.verdict = kNotSpectralByUniformity;
  }
  return r;
}

}  // namespace moran
