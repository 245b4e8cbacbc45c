#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypoly/calculus.hpp"
#include "hypoly/oracle.hpp"

namespace hypoly {

// Roots of t -> p(x - t d), sorted by descending real part. For a polynomial
// hyperbolic in direction d all roots are real; max_imag measures how far the
// computed spectrum is from that.
struct RootProfile {
  std::vector<Cplx> roots;
  Vec point;
  Vec direction;
  double max_imag = 0.0;
};

// Companion-matrix roots of a coefficient vector c_0..c_n (monic after
// normalization). Throws std::domain_error when the leading coefficient is
// negligible against the rest.
std::vector<Cplx> polynomial_roots(const std::vector<double>& coefficients);

RootProfile roots_in_direction(const PolynomialOracle& oracle, const Vec& x, const Vec& d);

struct RankReport {
  int rank = 0;
  std::vector<double> tail_coefficients;  // |S_{k,d}| = |c_{n-k}/c_n|, k = 0..n
  double threshold = 0.0;
  bool borderline = false;  // root certification was inconclusive at the tolerance
};

// p-rank of x in direction d: the largest k with S_{k,d}(x) away from zero,
// computed from the coefficients of p(t d + x). Requires x to be
// d-nonnegative (all roots real and nonnegative up to tolerance).
RankReport rank_p(const PolynomialOracle& oracle, const Vec& x, const Vec& d,
                  double zero_tol = 1e-7);

// Sum of the roots of p(x - t d) = 0, read off the restriction coefficients.
double trace_in_direction(const PolynomialOracle& oracle, const Vec& x, const Vec& d);

struct HyperbolicityReport {
  bool passed = true;
  double worst_imag = 0.0;
  std::optional<Vec> witness;
  int trials = 0;
};

// Samples Gaussian points and checks that every root profile is real up to
// 1e-6 * (1 + ||roots||_inf). Failure is reported, not thrown.
HyperbolicityReport is_hyperbolic_sampled(const PolynomialOracle& oracle, const Vec& direction,
                                          int trials, std::uint64_t seed);

struct HalfPlaneReport {
  bool passed = true;
  std::optional<CVec> witness;   // a zero with all real parts positive
  double witness_abs = 0.0;      // |p| at the witness
  double min_modulus_ratio = 0.0;
  int modulus_violations = 0;    // samples where |p(x+iy)| < |p(x)|
  int trials = 0;
};

// Checks the half-plane property two ways: random samples with positive real
// parts must stay away from zero, and any non-real root of p(x - t e) found
// at a random real point is rotated into an explicit zero with unit real
// parts. Also counts violations of |p(x+iy)| >= |p(x)| over the samples.
HalfPlaneReport half_plane_check(const PolynomialOracle& oracle, int trials,
                                 std::uint64_t seed);

struct SubmodularityReport {
  bool passed = true;
  bool normalized = true;  // R(empty) == 0
  int pairs_checked = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;  // subset masks
};

// Checks R(A u B) + R(A n B) <= R(A) + R(B) for random subset pairs, with
// R(S) = rank_p(sum_{i in S} e_i) in direction e.
SubmodularityReport rank_submodularity_check(const PolynomialOracle& oracle, int trials,
                                             std::uint64_t seed);

// R(S) for a subset mask; helper shared with the polymatroid check.
int subset_rank(const PolynomialOracle& oracle, std::uint64_t mask);

}  // namespace hypoly
