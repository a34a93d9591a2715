#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intlap/graph.hpp"

namespace intlap {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
// Distance within which a numeric eigenvalue counts as an integer.
inline constexpr double kIntegerMatchTolerance = 1e-6;

/// Dense L = D - A, row-major.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t n() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

LaplacianMatrix laplacian(const Graph& g);

/// n - rank(L - lambda I), by fraction-free (Bareiss) elimination over
/// arbitrary-precision integers. Throws std::invalid_argument if lambda < 0.
std::size_t integer_multiplicity(const LaplacianMatrix& lap, std::int64_t lambda);

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  double off_diagonal = 0;          // final off-diagonal Frobenius norm
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// tol * max(1, ||A||_F). Throws ConvergenceError after kMaxJacobiSweeps.
JacobiResult jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol);

/// All eigenvalues of `lap`, ascending, with values in (-tol', 0) clamped to 0.
std::vector<double> numeric_spectrum(const LaplacianMatrix& lap, double tol = kDefaultTolerance);

/// Nearest integer to x if it lies within `tol`.
std::optional<std::int64_t> as_integer(double x, double tol = kIntegerMatchTolerance);

/// "[0; 1.18541; 7^{(2)}; 9.27527]": five decimals, integer-valued runs
/// collapsed with a multiplicity superscript.
std::string format_spectrum(const std::vector<double>& spectrum,
                            double integer_tol = kIntegerMatchTolerance);

struct ExactReport {
  std::vector<std::pair<std::int64_t, std::size_t>> candidates;  // (lambda, multiplicity > 0)
  std::optional<std::vector<double>> numeric_spectrum;
};

/// Exact multiplicities of every integer 0..n that is an eigenvalue.
ExactReport exact_report(const LaplacianMatrix& lap, bool with_numeric = false,
                         double tol = kDefaultTolerance);

/// "0^(1) 5^(4)"
std::string format_exact(const ExactReport& report);

}  // namespace intlap
