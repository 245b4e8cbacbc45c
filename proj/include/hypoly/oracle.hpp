#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hypoly {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

// Exponent vector r with nonnegative integer entries summing to n, i.e. a
// member of I_{n,n}.
using ExponentVector = std::vector<int>;

bool is_exponent_vector(const ExponentVector& r, int n);

struct SupportSet {
  int n = 0;
  std::set<ExponentVector> vectors;
};

// Sparse homogeneous polynomial of degree n in n variables. Keys must sum to
// n and coefficients must be strictly positive, so the key set is exactly the
// support.
struct ExplicitPolynomial {
  int n = 0;
  std::map<ExponentVector, double> terms;
};

SupportSet support(const ExplicitPolynomial& poly);

// det(sum_i x_i A_i) with symmetric PSD A_i.
struct DeterminantalInstance {
  int n = 0;
  std::vector<Mat> matrices;
};

// prod_i (row_i . x) with entrywise nonnegative matrix.
struct ProductInstance {
  int n = 0;
  Mat matrix;
};

// tr((D(x) A)^n) with 0/1 adjacency matrix A.
struct TraceInstance {
  int n = 0;
  Mat adjacency;
};

// sum_i x_i^n.
struct PowerSumInstance {
  int n = 0;
};

using Instance = std::variant<ExplicitPolynomial, DeterminantalInstance,
                              ProductInstance, TraceInstance, PowerSumInstance>;

enum class OracleKind { Explicit, Determinantal, Product, Trace, PowerSum };

const char* kind_name(OracleKind kind);

int instance_n(const Instance& inst);
OracleKind instance_kind(const Instance& inst);

// Black-box evaluator for a homogeneous polynomial of degree `degree` in
// `dim` real variables. Every evaluation (real or complex) increments the
// call counter by exactly one; the counter is atomic so oracles may be
// evaluated from several threads at once. Everything else is immutable.
class PolynomialOracle {
 public:
  using RealEval = std::function<double(const Vec&)>;
  using ComplexEval = std::function<Cplx(const CVec&)>;

  PolynomialOracle(int degree, int dim, OracleKind kind, RealEval real_eval,
                   ComplexEval complex_eval);

  PolynomialOracle(const PolynomialOracle& other);
  PolynomialOracle& operator=(const PolynomialOracle& other);

  int degree() const { return degree_; }
  // Ambient variable count; equals degree() for all shipped families.
  int dim() const { return dim_; }
  OracleKind kind() const { return kind_; }

  double eval(const Vec& x) const;
  Cplx eval_complex(const CVec& z) const;

  std::uint64_t call_count() const {
    return calls_.load(std::memory_order_relaxed);
  }
  void reset_call_count() { calls_.store(0, std::memory_order_relaxed); }

 private:
  int degree_;
  int dim_;
  OracleKind kind_;
  RealEval real_eval_;
  ComplexEval complex_eval_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Builds the evaluator for an instance description. Validates dimensions,
// PSD-ness of determinantal matrices (eigenvalue floor -1e-9, negative
// eigenvalues clipped to zero on reconstruction), nonnegativity of product
// entries and 0/1-ness of adjacency entries. Throws std::invalid_argument.
PolynomialOracle make_oracle(const Instance& inst);

// det on the space of k x k matrices (input is the row-major flattening,
// length k*k). Degree k, dim k*k; used for p-mixed forms over matrix tuples.
PolynomialOracle determinant_oracle(int k);

// Flattens a square matrix into the coordinates determinant_oracle expects.
Vec flatten(const Mat& m);

}  // namespace hypoly
