#include "affineqm/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <random>
#include <sstream>

namespace affineqm::eigensolve {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// LU factorization of a tridiagonal matrix with partial pivoting; the layout
// follows LAPACK's ?gttrf (second superdiagonal du2 from row swaps).
class TridiagonalLU {
 public:
  TridiagonalLU(const TridiagonalOperator& op, double shift, double tiny) {
    const int n = op.size();
    d_.resize(n);
    for (int i = 0; i < n; ++i) d_[i] = op.diagonal[i] - shift;
    dl_ = op.offdiagonal;
    du_ = op.offdiagonal;
    du2_.assign(std::max(n - 2, 0), 0.0);
    swapped_.assign(std::max(n - 1, 0), 0);
    for (int i = 0; i + 1 < n; ++i) {
      if (std::fabs(d_[i]) >= std::fabs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = 1;
      }
    }
    if (d_[n - 1] == 0.0) d_[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const int n = static_cast<int>(d_.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (int i = n - 3; i >= 0; --i) {
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

 private:
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<char> swapped_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void scale_to_unit(std::vector<double>& v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
}

std::vector<double> inverse_iteration(const TridiagonalOperator& op, double eigenvalue,
                                      const std::vector<std::vector<double>>& previous,
                                      std::span<const double> previous_values,
                                      double tiny, double cluster_gap) {
  const int n = op.size();
  // Fixed-seed start vector; raw engine output keeps it identical on every
  // platform.
  std::mt19937 engine(20240101u + static_cast<std::uint32_t>(previous.size()));
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(engine()) / 4294967296.0 - 0.5;
  scale_to_unit(v);

  const TridiagonalLU lu(op, eigenvalue, tiny);
  for (int iter = 0; iter < 3; ++iter) {
    lu.solve(v);
    for (std::size_t j = 0; j < previous.size(); ++j) {
      if (std::fabs(previous_values[j] - eigenvalue) > cluster_gap) continue;
      const double c = dot(v, previous[j]);
      for (int i = 0; i < n; ++i) v[i] -= c * previous[j][i];
    }
    scale_to_unit(v);
  }
  return v;
}

}  // namespace

std::vector<double> TridiagonalOperator::apply(std::span<const double> v) const {
  const int n = size();
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    double s = diagonal[i] * v[i];
    if (i > 0) s += offdiagonal[i - 1] * v[i - 1];
    if (i + 1 < n) s += offdiagonal[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

std::pair<double, double> TridiagonalOperator::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(offdiagonal[i - 1]);
    if (i + 1 < n) r += std::fabs(offdiagonal[i]);
    lo = std::min(lo, diagonal[i] - r);
    hi = std::max(hi, diagonal[i] + r);
  }
  return {lo, hi};
}

int TridiagonalOperator::count_below(double sigma) const {
  const int n = size();
  double emax2 = 1.0;
  for (double e : offdiagonal) emax2 = std::max(emax2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * emax2;
  int count = 0;
  double q = diagonal[0] - sigma;
  for (int i = 0;; ++i) {
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    q = diagonal[i + 1] - sigma - offdiagonal[i] * offdiagonal[i] / q;
  }
  return count;
}

HalfLineGrid grid_for(const SpikedPotential& pot, double xmax, int npoints) {
  if (pot.b == 0.0) return HalfLineGrid(xmax, npoints);
  const double h = xmax / (npoints + 1);
  const double length = pot.b + xmax;
  const int n = static_cast<int>(std::lround(length / h)) - 1;
  return HalfLineGrid(length, n);
}

TridiagonalOperator build_hamiltonian(const SpikedPotential& pot, const HalfLineGrid& grid) {
  if (!(pot.b >= 0.0)) throw std::invalid_argument("build_hamiltonian: b must be >= 0");
  const int n = grid.size();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalOperator op{std::vector<double>(n), std::vector<double>(n - 1, -inv_h2), grid,
                         pot};
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i) - pot.b;
    const double v = eval_potential(pot, x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "build_hamiltonian: potential not finite at node " << i << " (x = " << x << ")";
      throw SolverError(msg.str());
    }
    op.diagonal[i] = 2.0 * inv_h2 + v;
  }
  return op;
}

SpectrumResult solve_spectrum(const TridiagonalOperator& op, int count, bool want_vectors) {
  const int n = op.size();
  if (count < 0 || count > n) {
    throw std::invalid_argument("solve_spectrum: count must lie in [0, npoints]");
  }
  SpectrumResult result;
  result.npoints = n;
  result.xmax = op.grid.xmax();
  result.h = op.grid.spacing();
  result.model = op.model;
  if (count == 0) return result;

  const auto [glo, ghi] = op.gershgorin();
  const double norm = std::max(std::fabs(glo), std::fabs(ghi));

  // Eigenvalue j is the smallest sigma with count_below(sigma) > j. Each
  // bracket is bisected until it stops shrinking.
  result.eigenvalues.resize(count);
  double lower = glo;
  for (int j = 0; j < count; ++j) {
    double lo = lower;
    double hi = ghi;
    if (op.count_below(lo) > j) {
      throw SolverError("solve_spectrum: Sturm bracket failure (lower bound)");
    }
    for (int iter = 0; iter < 2000; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi))) break;
      if (op.count_below(mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    result.eigenvalues[j] = 0.5 * (lo + hi);
    lower = lo;
  }
  for (int j = 1; j < count; ++j) {
    if (!(result.eigenvalues[j] > result.eigenvalues[j - 1])) {
      throw SolverError("solve_spectrum: eigenvalues not strictly increasing");
    }
  }

  if (want_vectors) {
    const double tiny = kEps * norm;
    const double cluster_gap = 1e-3 * norm;
    std::vector<std::vector<double>> vectors;
    const double scale = 1.0 / std::sqrt(op.grid.spacing());
    for (int j = 0; j < count; ++j) {
      auto v = inverse_iteration(op, result.eigenvalues[j], vectors,
                                 std::span(result.eigenvalues).first(j), tiny, cluster_gap);
      // Sign convention on the first component that is not negligible.
      double vmax = 0.0;
      for (double x : v) vmax = std::max(vmax, std::fabs(x));
      for (double x : v) {
        if (std::fabs(x) > 1e-8 * vmax) {
          if (x < 0.0) {
            for (double& y : v) y = -y;
          }
          break;
        }
      }
      std::vector<double> psi(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) psi[i] = v[i] * scale;
      result.eigenvectors.emplace_back(op.grid, std::move(psi));
      vectors.push_back(std::move(v));
    }
  }
  return result;
}

double eigen_residual(const TridiagonalOperator& op, double eps, std::span<const double> v) {
  const auto hv = op.apply(v);
  double r2 = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const double r = hv[i] - eps * v[i];
    r2 += r * r;
  }
  return std::sqrt(r2 / dot(v, v));
}

std::vector<HalfLineGrid> halving_ladder(const HalfLineGrid& base, int levels) {
  if (levels < 1) throw std::invalid_argument("halving_ladder: need at least one level");
  std::vector<HalfLineGrid> ladder{base};
  for (int i = 1; i < levels; ++i) ladder.push_back(ladder.back().refined());
  return ladder;
}

RefinedSpectrum refine_spectrum(const SpikedPotential& pot, int count,
                                std::span<const HalfLineGrid> ladder) {
  if (ladder.size() < 2) {
    throw std::invalid_argument("refine_spectrum: ladder needs at least two grids");
  }
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    const double ratio = ladder[i - 1].spacing() / ladder[i].spacing();
    if (std::fabs(ratio - 2.0) > 1e-9) {
      throw std::invalid_argument("refine_spectrum: grid spacing must halve at each level");
    }
  }
  RefinedSpectrum out;
  for (const auto& grid : ladder) {
    out.levels.push_back(solve_spectrum(build_hamiltonian(pot, grid), count, false));
  }
  const std::size_t last = ladder.size() - 1;
  for (int j = 0; j < count; ++j) {
    const double fine = out.levels[last].eigenvalues[j];
    const double mid = out.levels[last - 1].eigenvalues[j];
    out.extrapolated.push_back(fine + (fine - mid) / 3.0);
    double order = std::numeric_limits<double>::quiet_NaN();
    if (ladder.size() >= 3) {
      const double coarse = out.levels[last - 2].eigenvalues[j];
      order = std::log2((mid - coarse) / (fine - mid));
    }
    out.observed_order.push_back(order);
    bool monotone = true;
    for (std::size_t i = 2; i <= last; ++i) {
      const double d1 = out.levels[i - 1].eigenvalues[j] - out.levels[i - 2].eigenvalues[j];
      const double d2 = out.levels[i].eigenvalues[j] - out.levels[i - 1].eigenvalues[j];
      if ((d1 > 0.0) != (d2 > 0.0)) monotone = false;
    }
    out.monotone.push_back(monotone);
  }
  return out;
}

std::vector<SweepRow> sweep_b(std::span<const double> bvalues, int count,
                              const PhysicalParams& params, const SweepOptions& opts) {
  params.validate();
  for (std::size_t i = 0; i < bvalues.size(); ++i) {
    if (!(bvalues[i] >= 0.0)) throw std::invalid_argument("sweep_b: b values must be >= 0");
    if (i > 0 && !(bvalues[i] > bvalues[i - 1])) {
      throw std::invalid_argument("sweep_b: b values must be strictly increasing");
    }
  }
  auto solve_one = [&](double b) {
    try {
      const auto pot = SpikedPotential::shifted_oscillator(params, b);
      const auto op = build_hamiltonian(pot, grid_for(pot, opts.xmax, opts.npoints));
      return SweepRow{b, solve_spectrum(op, count, false).eigenvalues};
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sweep_b: solve failed at b = " << b << ": " << e.what();
      throw SolverError(msg.str());
    }
  };
  std::vector<SweepRow> rows;
  rows.reserve(bvalues.size());
  if (!opts.parallel) {
    for (double b : bvalues) rows.push_back(solve_one(b));
    return rows;
  }
  std::vector<std::future<SweepRow>> pending;
  for (double b : bvalues) pending.push_back(std::async(std::launch::async, solve_one, b));
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace affineqm::eigensolve
