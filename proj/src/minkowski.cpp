#include "pclab/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>

#include "pclab/boundary.hpp"
#include "pclab/errors.hpp"
#include "pclab/levi.hpp"

namespace pclab {

namespace {

void check_points(const std::vector<RVec>& points) {
  if (points.empty()) throw InputError("box counting needs a nonempty point set");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw InputError("box counting needs points of positive dimension");
  for (const RVec& p : points) {
    if (p.size() != dim) throw InputError("box counting points must share one dimension");
  }
}

// Median nearest-neighbor distance. Queries are strided down to a cap so the
// quadratic scan stays cheap on large clouds; targets always run over the
// full set.
double sample_pitch(const std::vector<RVec>& points) {
  const std::size_t n = points.size();
  if (n < 2) return 0.0;
  const std::size_t cap = 1024;
  const std::size_t stride = (n + cap - 1) / cap;
  std::vector<double> nearest;
  for (std::size_t i = 0; i < n; i += stride) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        s += diff * diff;
      }
      best = std::min(best, s);
    }
    nearest.push_back(std::sqrt(best));
  }
  std::sort(nearest.begin(), nearest.end());
  return nearest[nearest.size() / 2];
}

}  // namespace

int box_count(const std::vector<RVec>& points, double eps, double shift_frac) {
  if (points.empty()) return 0;
  check_points(points);
  if (!(eps > 0.0)) throw InputError("box size must be positive");
  const std::size_t dim = points.front().size();
  RVec anchor(dim, std::numeric_limits<double>::infinity());
  for (const RVec& p : points) {
    for (std::size_t k = 0; k < dim; ++k) anchor[k] = std::min(anchor[k], p[k]);
  }
  std::set<std::vector<long long>> cells;
  std::vector<long long> cell(dim);
  for (const RVec& p : points) {
    for (std::size_t k = 0; k < dim; ++k) {
      cell[k] = static_cast<long long>(std::floor((p[k] - anchor[k]) / eps + shift_frac));
    }
    cells.insert(cell);
  }
  return static_cast<int>(cells.size());
}

BoxCountReport dim_estimate(const std::vector<RVec>& points, double eps_max, double eps_min,
                            int rungs, double shift_frac) {
  check_points(points);
  if (!(eps_min > 0.0) || !(eps_max > eps_min)) {
    throw InputError("box ladder needs 0 < eps_min < eps_max");
  }
  if (rungs < 6) throw InputError("box ladder needs at least 6 rungs");

  BoxCountReport report;
  report.pitch = sample_pitch(points);
  const double ratio = std::pow(eps_min / eps_max, 1.0 / (rungs - 1));
  for (int i = 0; i < rungs; ++i) {
    const double eps = eps_max * std::pow(ratio, i);
    report.eps.push_back(eps);
    report.counts.push_back(box_count(points, eps, shift_frac));
  }

  // The ladder is ordered largest first, so the admissible rungs form a
  // leading run: once eps drops to the pitch scale the counts only probe the
  // finite sample and every smaller rung is starved too.
  int admissible = 0;
  while (admissible < rungs && report.pitch < report.eps[admissible] / 4.0) ++admissible;
  if (admissible < 4) {
    throw NumericError("fewer than 4 box rungs resolve the sample; refine it or raise eps_min");
  }
  report.fit_count = admissible;

  std::vector<double> xs, ys;
  for (int i = 0; i < admissible; ++i) {
    xs.push_back(std::log(1.0 / report.eps[i]));
    ys.push_back(std::log(static_cast<double>(std::max(report.counts[i], 1))));
  }
  const LineFit fit = fit_line(xs, ys);
  const double ambient = static_cast<double>(points.front().size());
  report.dimension = std::clamp(fit.slope, 0.0, ambient);
  report.residual = fit.residual;
  return report;
}

std::vector<RVec> embed_complex(const std::vector<CVec>& points) {
  std::vector<RVec> out;
  out.reserve(points.size());
  for (const CVec& z : points) {
    RVec r;
    r.reserve(2 * z.size());
    for (const Complex& c : z) {
      r.push_back(c.real());
      r.push_back(c.imag());
    }
    out.push_back(std::move(r));
  }
  return out;
}

SliceResult slice_weak_set(const Domain& d, const CVec& alpha, int direction_index,
                           const std::vector<Complex>& offsets, double window, int resolution,
                           double tol) {
  const int n = d.dimension();
  if (static_cast<int>(alpha.size()) != n) throw InputError("base point dimension mismatch");
  if (direction_index < 2 || direction_index > n) {
    throw InputError("slice direction index must be in 2..n");
  }
  if (static_cast<int>(offsets.size()) != n - 2) {
    throw InputError("slice offsets must cover the other tangent directions");
  }
  if (!(window > 0.0)) throw InputError("slice window must be positive");
  if (resolution < 2) throw InputError("slice resolution must be at least 2");
  if (!(tol > 0.0)) throw InputError("weak tolerance must be positive");

  const BoundaryFrame frame = tangent_frame(d, alpha);
  const CVec& line = frame.tangents[direction_index - 2];

  SliceResult result;
  for (int i = 0; i < resolution; ++i) {
    const double s = -window + 2.0 * window * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double t = -window + 2.0 * window * j / (resolution - 1);
      CVec q = alpha + Complex(s, t) * line;
      int used = 0;
      for (int k = 0; k + 1 < n; ++k) {
        if (k == direction_index - 2) continue;
        q = q + offsets[used++] * frame.tangents[k];
      }
      ++result.attempted;
      try {
        const CVec foot = project_to_boundary(d, q).point;
        if (classify_point(d, foot, tol) == PointClass::Weak) {
          result.coords.push_back({s, t});
        }
      } catch (const CollarError&) {
        ++result.failures;
      } catch (const NumericError&) {
        ++result.failures;
      }
    }
  }
  return result;
}

double strong_beta(double slice_dimension) { return std::max(0.0, 2.0 - slice_dimension); }

double holder_exponent(const std::vector<double>& samples) {
  if (samples.size() < 1000) throw InputError("exponent fit needs at least 1000 samples");
  std::vector<double> xs, ys;
  for (std::size_t lag = 1; 4 * lag <= samples.size(); lag *= 2) {
    double m = 0.0;
    for (std::size_t i = 0; i + lag < samples.size(); ++i) {
      m = std::max(m, std::abs(samples[i + lag] - samples[i]));
    }
    if (m > 0.0) {
      xs.push_back(std::log(static_cast<double>(lag)));
      ys.push_back(std::log(m));
    }
  }
  // A constant signal has no increments at any lag; every exponent fits and
  // we report the Lipschitz one.
  if (xs.size() < 2) return 1.0;
  return fit_line(xs, ys).slope;
}

}  // namespace pclab
