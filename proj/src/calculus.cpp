#include "hypoly/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypoly/util.hpp"

namespace hypoly {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_point(const PolynomialOracle& oracle, const Vec& v, const char* what) {
  if (v.size() != oracle.dim())
    throw std::invalid_argument(std::string(what) + ": vector length != oracle dim");
}

}  // namespace

UnivariateRestriction restrict_along(const PolynomialOracle& oracle, const Vec& base,
                                     const Vec& direction, double node_scale) {
  check_point(oracle, base, "restrict_along");
  check_point(oracle, direction, "restrict_along");
  const int n = oracle.degree();
  const double s = node_scale > 0.0
                       ? node_scale
                       : std::max(1.0, base.cwiseAbs().maxCoeff());

  // Chebyshev nodes on [-s, s]; distinct by construction.
  std::vector<double> nodes(n + 1), values(n + 1);
  for (int k = 0; k <= n; ++k) {
    nodes[k] = s * std::cos((2.0 * k + 1.0) * kPi / (2.0 * (n + 1)));
    values[k] = oracle.eval(base + nodes[k] * direction);
  }

  // Newton divided differences, then expansion to the monomial basis.
  std::vector<double> dd = values;
  for (int level = 1; level <= n; ++level)
    for (int k = n; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (nodes[k] - nodes[k - level]);

  std::vector<double> coef(n + 1, 0.0);
  coef[0] = dd[n];
  int deg = 0;
  for (int k = n - 1; k >= 0; --k) {
    // coef <- coef * (t - nodes[k]) + dd[k]
    for (int j = deg + 1; j >= 1; --j) coef[j] = coef[j - 1] - nodes[k] * coef[j];
    coef[0] = dd[k] - nodes[k] * coef[0];
    ++deg;
  }
  return {std::move(coef), s};
}

double partial_derivative(const PolynomialOracle& oracle, const Vec& point, int i) {
  check_point(oracle, point, "partial_derivative");
  if (i < 0 || i >= oracle.dim())
    throw std::invalid_argument("partial_derivative: coordinate index out of range");
  Vec dir = Vec::Zero(oracle.dim());
  dir[i] = 1.0;
  return restrict_along(oracle, point, dir).coefficients[1];
}

Vec gradient(const PolynomialOracle& oracle, const Vec& point) {
  check_point(oracle, point, "gradient");
  const int m = oracle.dim();
  const double fallback = 0.5 * std::max(1.0, point.cwiseAbs().maxCoeff());
  Vec g(m);
  Vec dir = Vec::Zero(m);
  for (int i = 0; i < m; ++i) {
    dir[i] = 1.0;
    const double s = std::max(0.5 * std::abs(point[i]), 1e-8 * fallback);
    g[i] = restrict_along(oracle, point, dir, s).coefficients[1];
    dir[i] = 0.0;
  }
  return g;
}

Vec gradient_log(const PolynomialOracle& oracle, const Vec& point) {
  return gradient_log(oracle, point, oracle.eval(point));
}

Vec gradient_log(const PolynomialOracle& oracle, const Vec& point, double value) {
  check_point(oracle, point, "gradient_log");
  if (point.minCoeff() <= 0.0)
    throw std::domain_error("gradient_log: point must be strictly positive");
  if (!(value > 0.0))
    throw std::domain_error("gradient_log: oracle is nonpositive at a positive point");
  const Vec g = gradient(oracle, point);
  return point.cwiseProduct(g) / value;
}

double polarization_mixed_derivative(const PolynomialOracle& oracle) {
  const int n = oracle.degree();
  if (oracle.dim() != n)
    throw std::invalid_argument("polarization: oracle must have dim == degree");
  if (n > 26) throw std::invalid_argument("polarization: n > 26 exceeds the 2^{n-1} budget");
  if (n == 1) return oracle.eval(Vec::Ones(1));

  const std::uint64_t total = 1ull << (n - 1);
  const double sum = detail::chunked_sum<double>(total, [&](std::uint64_t b, std::uint64_t e) {
    double acc = 0.0;
    Vec x(n);
    for (std::uint64_t m = b; m < e; ++m) {
      x[0] = 1.0;
      int parity = 0;
      for (int i = 1; i < n; ++i) {
        const bool neg = (m >> (i - 1)) & 1ull;
        x[i] = neg ? -1.0 : 1.0;
        parity ^= neg;
      }
      const double v = oracle.eval(x);
      acc += parity ? -v : v;
    }
    return acc;
  });
  return std::ldexp(sum, -(n - 1));
}

double mixed_form(const PolynomialOracle& oracle, const std::vector<Vec>& tuple) {
  const int n = oracle.degree();
  if (static_cast<int>(tuple.size()) != n)
    throw std::invalid_argument("mixed_form: tuple length must equal the degree");
  if (n > 26) throw std::invalid_argument("mixed_form: n > 26 exceeds the 2^n budget");
  for (const Vec& x : tuple)
    if (x.size() != oracle.dim())
      throw std::invalid_argument("mixed_form: tuple vector length != oracle dim");

  const std::uint64_t total = 1ull << n;
  const double sum = detail::chunked_sum<double>(total, [&](std::uint64_t b, std::uint64_t e) {
    double acc = 0.0;
    Vec x(oracle.dim());
    for (std::uint64_t m = b; m < e; ++m) {
      x.setZero();
      int parity = 0;
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1ull) {
          x -= tuple[i];
          parity ^= 1;
        } else {
          x += tuple[i];
        }
      }
      const double v = oracle.eval(x);
      acc += parity ? -v : v;
    }
    return acc;
  });
  return std::ldexp(sum, -n);
}

MonteCarloEstimate random_complex_mixed_derivative(const PolynomialOracle& oracle,
                                                   std::int64_t samples,
                                                   std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte carlo: samples must be >= 1");
  const int m = oracle.dim();

  struct Acc {
    double re = 0.0, im = 0.0, re_sq = 0.0;
    Acc& operator+=(const Acc& o) {
      re += o.re;
      im += o.im;
      re_sq += o.re_sq;
      return *this;
    }
  };

  const Acc acc = detail::chunked_sum<Acc>(
      static_cast<std::uint64_t>(samples),
      [&](std::uint64_t b, std::uint64_t e) {
        Acc a;
        CVec z(m);
        for (std::uint64_t k = b; k < e; ++k) {
          Rng rng(mix_seed(seed, k));
          Cplx weight = 1.0;
          for (int i = 0; i < m; ++i) {
            z[i] = rng.unit_circle();
            weight *= std::conj(z[i]);
          }
          const Cplx v = oracle.eval_complex(z) * weight;
          a.re += v.real();
          a.im += v.imag();
          a.re_sq += v.real() * v.real();
        }
        return a;
      },
      1024);

  MonteCarloEstimate est;
  est.samples = samples;
  const double ns = static_cast<double>(samples);
  est.mean = acc.re / ns;
  est.mean_imag = acc.im / ns;
  if (samples > 1) {
    const double var = std::max(0.0, (acc.re_sq - ns * est.mean * est.mean) / (ns - 1.0));
    est.std_error = std::sqrt(var / ns);
  }
  return est;
}

double ryser_permanent(const Mat& matrix) {
  const int n = static_cast<int>(matrix.rows());
  if (matrix.cols() != n) throw std::invalid_argument("ryser: matrix must be square");
  if (n > 20) throw std::invalid_argument("ryser: n > 20 exceeds the 2^n budget");
  if (n == 0) return 1.0;

  // Gray-code walk over column subsets with incremental row sums.
  std::vector<double> row_sum(n, 0.0);
  double total = 0.0;
  std::uint64_t prev = 0;
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ prev;
    int col = 0;
    while (!((diff >> col) & 1ull)) ++col;
    const double sgn_col = (gray >> col) & 1ull ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sum[i] += sgn_col * matrix(i, col);
    prev = gray;

    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    const int bits = __builtin_popcountll(gray);
    total += ((n - bits) & 1) ? -prod : prod;
  }
  return total;
}

double brute_mixed_discriminant(const std::vector<Mat>& matrices) {
  const int n = static_cast<int>(matrices.size());
  if (n < 1) throw std::invalid_argument("mixed discriminant: empty tuple");
  if (n > 8) throw std::invalid_argument("mixed discriminant: n > 8 exceeds the budget");
  for (const Mat& a : matrices)
    if (a.rows() != n || a.cols() != n)
      throw std::invalid_argument("mixed discriminant: matrices must be n x n");

  // Route 1: polarization mixed form of det over the tuple.
  const PolynomialOracle det = determinant_oracle(n);
  std::vector<Vec> tuple;
  tuple.reserve(n);
  for (const Mat& a : matrices) tuple.push_back(flatten(a));
  const double via_mixed_form = mixed_form(det, tuple);

  // Route 2: finite differences on the 0/1 grid. The n-th mixed partial of a
  // degree-n polynomial equals the alternating sum of subset evaluations.
  double via_differences = 0.0;
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t s = 1; s < count; ++s) {
    Mat sum = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1ull) sum += matrices[i];
    const double d = Eigen::PartialPivLU<Mat>(sum).determinant();
    const int bits = __builtin_popcountll(s);
    via_differences += ((n - bits) & 1) ? -d : d;
  }

  double scale = 1.0;
  for (const Mat& a : matrices) scale *= std::max(a.norm(), 1e-30);
  const double diff = std::abs(via_mixed_form - via_differences);
  const double mag = std::max(std::abs(via_mixed_form), std::abs(via_differences));
  if (diff > 1e-6 * mag && diff > 1e-8 * scale)
    throw std::runtime_error("mixed discriminant: evaluation routes disagree (" +
                             std::to_string(via_mixed_form) + " vs " +
                             std::to_string(via_differences) + ")");
  return via_mixed_form;
}

std::vector<ExponentVector> enumerate_exponents(int n) {
  std::vector<ExponentVector> out;
  ExponentVector current(n, 0);
  // Lexicographic enumeration of compositions of n into n parts.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

ExplicitPolynomial expand_to_explicit(const PolynomialOracle& oracle) {
  const int n = oracle.degree();
  if (oracle.dim() != n)
    throw std::invalid_argument("expand: oracle must have dim == degree");
  if (n > 12) throw std::invalid_argument("expand: n > 12 would blow up combinatorially");

  std::vector<double> factorial(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  const auto exponents = enumerate_exponents(n);
  std::vector<double> raw(exponents.size());
  double max_abs = 0.0;
  for (std::size_t t = 0; t < exponents.size(); ++t) {
    const ExponentVector& r = exponents[t];
    std::vector<Vec> tuple;
    tuple.reserve(n);
    double denom = 1.0;
    for (int i = 0; i < n; ++i) {
      denom *= factorial[r[i]];
      for (int c = 0; c < r[i]; ++c) {
        Vec e = Vec::Zero(n);
        e[i] = 1.0;
        tuple.push_back(std::move(e));
      }
    }
    raw[t] = mixed_form(oracle, tuple) / denom;
    max_abs = std::max(max_abs, std::abs(raw[t]));
  }

  ExplicitPolynomial poly{n, {}};
  const double tol = 1e-9 * std::max(max_abs, 1e-300);
  for (std::size_t t = 0; t < exponents.size(); ++t) {
    if (std::abs(raw[t]) <= tol) continue;
    if (raw[t] < 0.0)
      throw std::runtime_error("expand: recovered a negative coefficient; "
                               "oracle is not a nonnegative-coefficient polynomial");
    poly.terms[exponents[t]] = raw[t];
  }
  return poly;
}

}  // namespace hypoly
