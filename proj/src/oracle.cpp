#include "hypoly/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "hypoly/util.hpp"

namespace hypoly {

bool is_exponent_vector(const ExponentVector& r, int n) {
  if (static_cast<int>(r.size()) != n) return false;
  int sum = 0;
  for (int e : r) {
    if (e < 0) return false;
    sum += e;
  }
  return sum == n;
}

SupportSet support(const ExplicitPolynomial& poly) {
  SupportSet s;
  s.n = poly.n;
  for (const auto& [exp, coef] : poly.terms) {
    (void)coef;
    s.vectors.insert(exp);
  }
  return s;
}

const char* kind_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::Explicit: return "explicit";
    case OracleKind::Determinantal: return "determinantal";
    case OracleKind::Product: return "product";
    case OracleKind::Trace: return "trace";
    case OracleKind::PowerSum: return "powersum";
  }
  return "unknown";
}

int instance_n(const Instance& inst) {
  return std::visit([](const auto& i) { return i.n; }, inst);
}

OracleKind instance_kind(const Instance& inst) {
  struct Visitor {
    OracleKind operator()(const ExplicitPolynomial&) { return OracleKind::Explicit; }
    OracleKind operator()(const DeterminantalInstance&) { return OracleKind::Determinantal; }
    OracleKind operator()(const ProductInstance&) { return OracleKind::Product; }
    OracleKind operator()(const TraceInstance&) { return OracleKind::Trace; }
    OracleKind operator()(const PowerSumInstance&) { return OracleKind::PowerSum; }
  };
  return std::visit(Visitor{}, inst);
}

PolynomialOracle::PolynomialOracle(int degree, int dim, OracleKind kind,
                                   RealEval real_eval, ComplexEval complex_eval)
    : degree_(degree),
      dim_(dim),
      kind_(kind),
      real_eval_(std::move(real_eval)),
      complex_eval_(std::move(complex_eval)) {
  if (degree_ < 1 || dim_ < 1) throw std::invalid_argument("oracle: degree and dim must be positive");
}

PolynomialOracle::PolynomialOracle(const PolynomialOracle& other)
    : degree_(other.degree_),
      dim_(other.dim_),
      kind_(other.kind_),
      real_eval_(other.real_eval_),
      complex_eval_(other.complex_eval_),
      calls_(other.call_count()) {}

PolynomialOracle& PolynomialOracle::operator=(const PolynomialOracle& other) {
  degree_ = other.degree_;
  dim_ = other.dim_;
  kind_ = other.kind_;
  real_eval_ = other.real_eval_;
  complex_eval_ = other.complex_eval_;
  calls_.store(other.call_count(), std::memory_order_relaxed);
  return *this;
}

double PolynomialOracle::eval(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("oracle eval: point has wrong length");
  if (!x.allFinite()) throw std::invalid_argument("oracle eval: non-finite input entry");
  calls_.fetch_add(1, std::memory_order_relaxed);
  return real_eval_(x);
}

Cplx PolynomialOracle::eval_complex(const CVec& z) const {
  if (z.size() != dim_) throw std::invalid_argument("oracle eval: point has wrong length");
  if (!z.allFinite()) throw std::invalid_argument("oracle eval: non-finite input entry");
  calls_.fetch_add(1, std::memory_order_relaxed);
  return complex_eval_(z);
}

namespace {

void validate_square(const Mat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

// Validates symmetry and PSD-ness, then reconstructs with negative
// eigenvalues clipped to zero.
Mat sanitize_psd(const Mat& a, int index) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("determinantal: matrix " + std::to_string(index) +
                                " is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const Vec& ev = es.eigenvalues();
  const double floor = -1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() < floor)
    throw std::invalid_argument("determinantal: matrix " + std::to_string(index) +
                                " is not positive semidefinite");
  Vec clipped = ev.cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

PolynomialOracle make_explicit(const ExplicitPolynomial& p) {
  if (p.n < 1) throw std::invalid_argument("explicit: n must be positive");
  for (const auto& [exp, coef] : p.terms) {
    if (!is_exponent_vector(exp, p.n))
      throw std::invalid_argument("explicit: term exponent not in I_{n,n}");
    if (!(coef > 0.0))
      throw std::invalid_argument("explicit: coefficients must be strictly positive");
  }
  auto terms = p.terms;
  const int n = p.n;
  auto real_eval = [terms, n](const Vec& x) {
    double acc = 0.0;
    for (const auto& [exp, coef] : terms) {
      double mono = coef;
      for (int i = 0; i < n; ++i) mono *= ipow(x[i], exp[i]);
      acc += mono;
    }
    return acc;
  };
  auto complex_eval = [terms, n](const CVec& z) {
    Cplx acc = 0.0;
    for (const auto& [exp, coef] : terms) {
      Cplx mono = coef;
      for (int i = 0; i < n; ++i) mono *= ipow(z[i], exp[i]);
      acc += mono;
    }
    return acc;
  };
  return {n, n, OracleKind::Explicit, real_eval, complex_eval};
}

PolynomialOracle make_determinantal(const DeterminantalInstance& inst) {
  const int n = inst.n;
  if (n < 1) throw std::invalid_argument("determinantal: n must be positive");
  if (static_cast<int>(inst.matrices.size()) != n)
    throw std::invalid_argument("determinantal: need exactly n matrices");
  std::vector<Mat> ms;
  ms.reserve(n);
  for (int i = 0; i < n; ++i) {
    validate_square(inst.matrices[i], n, "determinantal");
    ms.push_back(sanitize_psd(inst.matrices[i], i));
  }
  auto real_eval = [ms, n](const Vec& x) {
    Mat m = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) m += x[i] * ms[i];
    return Eigen::PartialPivLU<Mat>(m).determinant();
  };
  auto complex_eval = [ms, n](const CVec& z) {
    CMat m = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i) m += z[i] * ms[i];
    return Eigen::PartialPivLU<CMat>(m).determinant();
  };
  return {n, n, OracleKind::Determinantal, real_eval, complex_eval};
}

PolynomialOracle make_product(const ProductInstance& inst) {
  const int n = inst.n;
  if (n < 1) throw std::invalid_argument("product: n must be positive");
  validate_square(inst.matrix, n, "product");
  if (inst.matrix.minCoeff() < -1e-12)
    throw std::invalid_argument("product: negative matrix entry");
  const Mat m = inst.matrix.cwiseMax(0.0);
  auto real_eval = [m](const Vec& x) {
    double acc = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) acc *= m.row(i).dot(x);
    return acc;
  };
  auto complex_eval = [m](const CVec& z) {
    Cplx acc = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Cplx row = 0.0;
      for (Eigen::Index j = 0; j < m.cols(); ++j) row += m(i, j) * z[j];
      acc *= row;
    }
    return acc;
  };
  return {n, n, OracleKind::Product, real_eval, complex_eval};
}

// (D(x) A)^n by repeated squaring: O(n^3 log n) per evaluation.
template <class Matrix>
Matrix matrix_power(Matrix base, int exp) {
  Matrix r = Matrix::Identity(base.rows(), base.cols());
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

PolynomialOracle make_trace(const TraceInstance& inst) {
  const int n = inst.n;
  if (n < 1) throw std::invalid_argument("trace: n must be positive");
  validate_square(inst.adjacency, n, "trace");
  Mat a = inst.adjacency;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      if (std::abs(v) > 1e-9 && std::abs(v - 1.0) > 1e-9)
        throw std::invalid_argument("trace: adjacency entries must be 0 or 1");
      a(i, j) = std::abs(v) > 0.5 ? 1.0 : 0.0;
    }
  auto real_eval = [a, n](const Vec& x) {
    const Mat da = x.asDiagonal() * a;
    return matrix_power(da, n).trace();
  };
  auto complex_eval = [a, n](const CVec& z) {
    const CMat da = z.asDiagonal() * a.cast<Cplx>();
    return matrix_power(da, n).trace();
  };
  return {n, n, OracleKind::Trace, real_eval, complex_eval};
}

PolynomialOracle make_powersum(const PowerSumInstance& inst) {
  const int n = inst.n;
  if (n < 1) throw std::invalid_argument("powersum: n must be positive");
  auto real_eval = [n](const Vec& x) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += ipow(x[i], n);
    return acc;
  };
  auto complex_eval = [n](const CVec& z) {
    Cplx acc = 0.0;
    for (int i = 0; i < n; ++i) acc += ipow(z[i], n);
    return acc;
  };
  return {n, n, OracleKind::PowerSum, real_eval, complex_eval};
}

}  // namespace

PolynomialOracle make_oracle(const Instance& inst) {
  struct Visitor {
    PolynomialOracle operator()(const ExplicitPolynomial& p) { return make_explicit(p); }
    PolynomialOracle operator()(const DeterminantalInstance& d) { return make_determinantal(d); }
    PolynomialOracle operator()(const ProductInstance& p) { return make_product(p); }
    PolynomialOracle operator()(const TraceInstance& t) { return make_trace(t); }
    PolynomialOracle operator()(const PowerSumInstance& p) { return make_powersum(p); }
  };
  return std::visit(Visitor{}, inst);
}

PolynomialOracle determinant_oracle(int k) {
  if (k < 1) throw std::invalid_argument("determinant_oracle: k must be positive");
  auto real_eval = [k](const Vec& x) {
    Mat m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = x[i * k + j];
    return Eigen::PartialPivLU<Mat>(m).determinant();
  };
  auto complex_eval = [k](const CVec& z) {
    CMat m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = z[i * k + j];
    return Eigen::PartialPivLU<CMat>(m).determinant();
  };
  return {k, k * k, OracleKind::Determinantal, real_eval, complex_eval};
}

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

}  // namespace hypoly
