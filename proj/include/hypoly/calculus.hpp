#pragma once

#include <cstdint>
#include <vector>

#include "hypoly/oracle.hpp"

namespace hypoly {

// Coefficients c_0..c_n of t -> p(base + t * direction).
struct UnivariateRestriction {
  std::vector<double> coefficients;
  double node_scale = 1.0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Recovers the restriction coefficients from degree+1 evaluations at
// Chebyshev nodes on [-s, s] via Newton divided differences. By default
// s = max(1, ||base||_inf); callers with better knowledge of the relevant
// t-range may pass their own scale.
UnivariateRestriction restrict_along(const PolynomialOracle& oracle, const Vec& base,
                                     const Vec& direction, double node_scale = 0.0);

// d/dt p(point + t e_i) at t = 0; degree+1 oracle calls.
double partial_derivative(const PolynomialOracle& oracle, const Vec& point, int i);

// All first partials. Node scale per coordinate is max(|x_i|/2, tiny) so the
// recovered derivative stays accurate when coordinates span many orders of
// magnitude (which happens at points e^y inside the ellipsoid ball).
Vec gradient(const PolynomialOracle& oracle, const Vec& point);

// Entries x_i d_i q(x) / q(x); strictly positive x with q(x) > 0 required.
// Sums to the degree by the Euler identity. Costs 1 + n(degree+1) calls.
Vec gradient_log(const PolynomialOracle& oracle, const Vec& point);

// As above but with q(x) already known (saves the one value call).
Vec gradient_log(const PolynomialOracle& oracle, const Vec& point, double value);

// d^n/dx_1..dx_n p via the polarization identity with the first sign fixed:
// 2^{-n+1} sum_{b in {-1,1}^{n-1}} p(1, b_2, .., b_n) prod b_i.
// Exactly 2^{n-1} oracle calls; requires dim == degree == n <= 26.
double polarization_mixed_derivative(const PolynomialOracle& oracle);

// p-mixed form over an n-tuple of ambient vectors:
// 2^{-n} sum_{b in {-1,1}^n} p(sum b_i x_i) prod b_i. Requires tuple size ==
// degree <= 26.
double mixed_form(const PolynomialOracle& oracle, const std::vector<Vec>& tuple);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double mean_imag = 0.0;
  std::int64_t samples = 0;
};

// Unbiased estimator of d^n/dx_1..dx_n p: the mean of p(z) prod conj(z_i)
// over i.i.d. unit-circle coordinates (E z = 0, E |z|^2 = 1).
MonteCarloEstimate random_complex_mixed_derivative(const PolynomialOracle& oracle,
                                                   std::int64_t samples,
                                                   std::uint64_t seed);

// Permanent by inclusion-exclusion over column subsets, O(2^n n); n <= 20.
double ryser_permanent(const Mat& matrix);

// Mixed discriminant of a PSD tuple (n <= 8) computed along two independent
// routes that must agree to 1e-6 relative: the polarization mixed form of
// det, and inclusion-exclusion over subset sums of the tuple.
double brute_mixed_discriminant(const std::vector<Mat>& matrices);

// All coefficients of an oracle with dim == degree == n, recovered through
// mixed forms over repeated coordinate tuples. Guarded at n <= 12.
ExplicitPolynomial expand_to_explicit(const PolynomialOracle& oracle);

// Enumerates I_{n,n} in lexicographic order.
std::vector<ExponentVector> enumerate_exponents(int n);

}  // namespace hypoly
