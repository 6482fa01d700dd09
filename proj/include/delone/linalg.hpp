#pragma once

// Small dense matrices over the coordinate type, plus the numeric helpers the
// spectral checks need: Faddeev-LeVerrier characteristic polynomials,
// Durand-Kerner root finding, Gaussian solves (exact over rationals, pivoted
// over doubles). Dimensions here are tiny (d, n <= a handful).

#include "delone/scalar.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace delone {

using CoordRows = std::vector<std::vector<Coord>>;

class CoordMatrix {
 public:
  CoordMatrix() = default;
  explicit CoordMatrix(CoordRows rows);
  static CoordMatrix identity(std::size_t d, const ScalarMode& mode);

  std::size_t dim() const { return rows_.size(); }
  const CoordRows& rows() const { return rows_; }
  const Coord& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Point apply(const Point& x) const;
  CoordMatrix mul(const CoordMatrix& o) const;
  CoordMatrix pow(unsigned p, const ScalarMode& mode) const;
  CoordMatrix sub(const CoordMatrix& o) const;

  std::vector<std::vector<double>> to_double() const;
  bool is_rational() const;

 private:
  CoordRows rows_;
};

// Exact solve M x = b over rationals. Throws if singular.
std::vector<Rat> solve_rational(const std::vector<std::vector<Rat>>& m,
                                const std::vector<Rat>& b);

// Pivoted double solve. Throws if (numerically) singular.
std::vector<double> solve_double(std::vector<std::vector<double>> m,
                                 std::vector<double> b);

Rat det_rational(std::vector<std::vector<Rat>> m);
double det_double(std::vector<std::vector<double>> m);

// Monic characteristic polynomial coefficients c (degree d):
// char(x) = x^d + c[d-1] x^{d-1} + ... + c[0].
std::vector<Rat> char_poly_rational(const std::vector<std::vector<Rat>>& m);
std::vector<double> char_poly_double(const std::vector<std::vector<double>>& m);

// All complex roots of the monic polynomial with the coefficient layout above.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

// Eigenvalue moduli of a real matrix via its characteristic polynomial.
double spectral_radius(const std::vector<std::vector<double>>& m);
double min_eigen_modulus(const std::vector<std::vector<double>>& m);

std::vector<std::vector<double>> mat_mul(const std::vector<std::vector<double>>& a,
                                         const std::vector<std::vector<double>>& b);
std::vector<std::vector<double>> mat_inverse(std::vector<std::vector<double>> m);
std::vector<double> mat_apply(const std::vector<std::vector<double>>& m,
                              const std::vector<double>& x);

// Operator norm estimate (spectral norm via power iteration on M^T M).
double operator_norm(const std::vector<std::vector<double>>& m);

}  // namespace delone
