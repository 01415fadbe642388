#pragma once

// Reference computations that share no code with the library under test.

#include <modirac/gauge.hpp>
#include <modirac/types.hpp>

#include <complex>

namespace modirac::oracle {

using LComplex = std::complex<long double>;
using LMatrix4 = Eigen::Matrix<LComplex, 4, 4>;

/// Plain Taylor series in long double, `terms` terms, no scaling.
inline ComplexMatrix4 taylor_exp(const ComplexMatrix4& m, int terms = 60)
{
  const LMatrix4 a = m.cast<LComplex>();
  LMatrix4 term = LMatrix4::Identity();
  LMatrix4 sum = LMatrix4::Identity();
  for (int k = 1; k < terms; ++k) {
    term = (term * a) / static_cast<long double>(k);
    sum += term;
  }
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out(r, c) = Complex(static_cast<double>(sum(r, c).real()),
                          static_cast<double>(sum(r, c).imag()));
    }
  }
  return out;
}

struct TruncatedSeries {
  GridState value;
  /// Norms of the individual terms (z B)^k psi / k!, k = 0..terms-1.
  std::vector<double> term_norms;
};

/// sum_{k < terms} (z B)^k psi / k!, built matrix-free from repeated B application.
inline TruncatedSeries exp_series(const CouplingOperator& b, const GridState& psi, Complex z,
                                  int terms)
{
  TruncatedSeries out;
  GridState term = psi;
  out.value = psi;
  out.term_norms.push_back(norm(b.grid(), psi));
  for (int k = 1; k < terms; ++k) {
    term = b.apply(term);
    term.psi *= z / static_cast<double>(k);
    out.value.psi += term.psi;
    out.term_norms.push_back(norm(b.grid(), term));
  }
  return out;
}

/// Plane wave e^{i k x} u sampled on a grid.
inline GridState plane_wave(const Grid& grid, double k, const Spinor& u)
{
  GridState s;
  s.psi.resize(static_cast<Eigen::Index>(grid.size()), 4);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex phase = std::exp(Complex(0.0, k * grid.x(j)));
    s.psi.row(static_cast<Eigen::Index>(j)) = (phase * u).transpose();
  }
  return s;
}

}  // namespace modirac::oracle
