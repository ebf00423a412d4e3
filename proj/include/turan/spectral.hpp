#pragma once

// Dense symmetric eigendecomposition by cyclic Jacobi rotations.

#include <cmath>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Row-major square matrix of doubles.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  Matrix(int n, std::vector<double> values) : n_(n), a_(std::move(values)) {
    if (a_.size() != static_cast<std::size_t>(n) * n) throw PreconditionError("Matrix: size mismatch");
  }

  static Matrix adjacency(const WeightedGraph& g) {
    auto a = g.adjacency();
    return Matrix(g.order(), std::vector<double>(a.begin(), a.end()));
  }

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  double frobenius() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

private:
  int n_ = 0;
  std::vector<double> a_;
};

struct SpectrumSummary {
  std::vector<double> eigenvalues;  // descending
  double spectral_radius = 0.0;
  double principal_eigenvalue = 0.0;   // the eigenvalue mu with |mu| = spectral_radius
  std::vector<double> principal_vector;  // unit, largest-magnitude entry positive
  double frobenius_norm = 0.0;           // from the entries
  double eigen_square_sum = 0.0;         // sum of eigenvalue^2
  int sweeps = 0;

  /// |‖M‖_F² − Σλ²| relative to max(1, ‖M‖_F²).
  double frobenius_trace_residual() const {
    const double f2 = frobenius_norm * frobenius_norm;
    return std::abs(f2 - eigen_square_sum) / std::max(1.0, f2);
  }
};

inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Full spectrum of a symmetric matrix. Converged once the off-diagonal
/// Frobenius mass is at most 1e-13 * max(1, ‖M‖_F).
inline SpectrumSummary eigen_sym(const Matrix& m) {
  const int n = m.dim();
  SpectrumSummary out;
  out.frobenius_norm = m.frobenius();
  const double scale = std::max(1.0, out.frobenius_norm);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j))) throw PreconditionError("eigen_sym: non-finite entry");
      if (std::abs(m(i, j) - m(j, i)) > kSymmetryTolerance * scale)
        throw PreconditionError("eigen_sym: matrix is not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }

  Matrix a = m;
  Matrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  auto off_mass = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  const double target = kJacobiTolerance * scale;
  int sweep = 0;
  while (off_mass() > target) {
    if (sweep == kJacobiMaxSweeps)
      throw NumericalError("eigen_sym: no convergence after " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
  for (int i : order) {
    out.eigenvalues.push_back(a(i, i));
    out.eigen_square_sum += a(i, i) * a(i, i);
  }
  if (n == 0) return out;

  // Largest |eigenvalue|; prefer the positive one of a ±λ pair.
  int pick = order.front();
  const double top = a(order.front(), order.front());
  const double bottom = a(order.back(), order.back());
  if (-bottom > top * (1.0 + 1e-12) + 1e-300) pick = order.back();
  out.principal_eigenvalue = a(pick, pick);
  out.spectral_radius = std::abs(out.principal_eigenvalue);

  out.principal_vector.resize(static_cast<std::size_t>(n));
  int lead = 0;
  for (int k = 0; k < n; ++k) {
    out.principal_vector[k] = v(k, pick);
    if (std::abs(v(k, pick)) > std::abs(v(lead, pick))) lead = k;
  }
  if (out.principal_vector[lead] < 0)
    for (double& x : out.principal_vector) x = -x;
  return out;
}

inline SpectrumSummary spectrum(const WeightedGraph& g) { return eigen_sym(Matrix::adjacency(g)); }

/// λ(G) = max |eigenvalue| of the weighted adjacency matrix (0 for no edges).
inline double spectral_radius(const WeightedGraph& g) { return spectrum(g).spectral_radius; }

/// ‖A v − μ v‖₂.
inline double eigen_residual(const Matrix& m, const std::vector<double>& vec, double mu) {
  auto y = m.apply(vec);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += (y[i] - mu * vec[i]) * (y[i] - mu * vec[i]);
  return std::sqrt(s);
}

/// Nonnegative unit Perron vector of an entrywise nonnegative symmetric
/// matrix: power iteration on M + (λ/2)I started from the all-ones vector.
/// The shift separates λ from -λ, so bipartite structure cannot stall it.
inline std::vector<double> perron_vector(const Matrix& m, double lambda) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0) throw PreconditionError("perron_vector: matrix has a negative entry");
  std::vector<double> x(static_cast<std::size_t>(n), n > 0 ? 1.0 / std::sqrt(double(n)) : 0.0);
  if (n == 0) return x;
  const double shift = 0.5 * lambda;
  for (int it = 0; it < 20000; ++it) {
    auto y = m.apply(x);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return x;
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      change = std::max(change, std::abs(y[i] - x[i]));
    }
    x = std::move(y);
    if (change <= 1e-15) break;
  }
  return x;
}

}  // namespace turan
