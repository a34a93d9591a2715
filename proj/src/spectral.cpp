#include "intlap/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "intlap/errors.hpp"

namespace intlap {

LaplacianMatrix laplacian(const Graph& g) {
  const std::size_t n = g.n();
  LaplacianMatrix lap(n);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    lap(v, v) = static_cast<std::int64_t>(g.degree(v));
    for (Vertex w : g.neighbors(v)) lap(v, w) = -1;
  }
  return lap;
}

std::size_t integer_multiplicity(const LaplacianMatrix& lap, std::int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be non-negative");
  const std::size_t n = lap.n();
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t x = lap(i, j) - (i == j ? lambda : 0);
      a[i * n + j] = static_cast<long>(x);
    }
  }

  // Every entry after step k is a (k+1)-minor of the input, so the division
  // by the previous pivot is exact.
  mpz_class prev = 1;
  mpz_class t;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
    }
    const mpz_class& p = a[rank * n + col];
    for (std::size_t i = rank + 1; i < n; ++i) {
      mpz_class& lead = a[i * n + col];
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class& x = a[i * n + j];
        mpz_mul(t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[rank * n + j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    ++rank;
  }
  return n - rank;
}

JacobiResult jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (a.size() != n * n) throw std::invalid_argument("matrix size mismatch");
  auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double frob = 0;
  for (double x : a) frob += x * x;
  const double threshold = tol * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += at(p, q) * at(p, q);
    return std::sqrt(2 * s);
  };

  JacobiResult result;
  double off = off_norm();
  while (off >= threshold) {
    if (result.sweeps == kMaxJacobiSweeps) {
      throw ConvergenceError("Jacobi iteration did not converge", off);
    }
    ++result.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = at(r, p);
          const double h = at(r, q);
          at(r, p) = at(p, r) = g - s * (h + g * tau);
          at(r, q) = at(q, r) = h + s * (g - h * tau);
        }
      }
    }
    off = off_norm();
  }

  result.off_diagonal = off;
  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = at(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

std::vector<double> numeric_spectrum(const LaplacianMatrix& lap, double tol) {
  const std::size_t n = lap.n();
  std::vector<double> a(n * n);
  double frob = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = static_cast<double>(lap(i, j));
      frob += a[i * n + j] * a[i * n + j];
    }
  }
  JacobiResult r = jacobi_eigenvalues(std::move(a), n, tol);
  const double scale = std::max(1.0, std::sqrt(frob));
  const double clamp =
      tol * scale + 64 * std::numeric_limits<double>::epsilon() * scale;
  for (double& x : r.eigenvalues) {
    if (x < 0 && x > -clamp) x = 0;
  }
  return r.eigenvalues;
}

std::optional<std::int64_t> as_integer(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

std::string format_spectrum(const std::vector<double>& spectrum, double integer_tol) {
  std::string out = "[";
  char buf[64];
  for (std::size_t i = 0; i < spectrum.size();) {
    if (i) out += "; ";
    if (auto k = as_integer(spectrum[i], integer_tol)) {
      std::size_t j = i + 1;
      while (j < spectrum.size() && as_integer(spectrum[j], integer_tol) == k) ++j;
      out += std::to_string(*k);
      if (j - i > 1) out += "^{(" + std::to_string(j - i) + ")}";
      i = j;
    } else {
      std::snprintf(buf, sizeof buf, "%.5f", spectrum[i]);
      out += buf;
      ++i;
    }
  }
  out += "]";
  return out;
}

ExactReport exact_report(const LaplacianMatrix& lap, bool with_numeric, double tol) {
  ExactReport report;
  const std::size_t n = lap.n();
  std::size_t total = 0;
  for (std::int64_t lambda = 0; lambda <= static_cast<std::int64_t>(n) && total < n; ++lambda) {
    const std::size_t mult = integer_multiplicity(lap, lambda);
    if (mult > 0) {
      report.candidates.emplace_back(lambda, mult);
      total += mult;
    }
  }
  if (with_numeric) report.numeric_spectrum = numeric_spectrum(lap, tol);
  return report;
}

std::string format_exact(const ExactReport& report) {
  std::string out;
  for (const auto& [lambda, mult] : report.candidates) {
    if (!out.empty()) out += ' ';
    out += std::to_string(lambda) + "^(" + std::to_string(mult) + ")";
  }
  return out;
}

}  // namespace intlap
