#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gusym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Caller supplied a malformed or out-of-domain argument.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A documented modelling constraint was violated (e.g. m < n + 1 for a pure reference).
class ConstraintViolation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed; indicates a bug or numerical breakdown upstream.
class InternalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size cap.
class ResourceLimit : public std::length_error {
  public:
    using std::length_error::length_error;
};

inline double max_abs(const Matrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double hermiticity_residual(const Matrix& a) {
    return max_abs(a - a.adjoint());
}

inline double completeness_residual(const Matrix& sum) {
    return max_abs(sum - Matrix::Identity(sum.rows(), sum.cols()));
}

inline double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    double b = 1.0;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

inline std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Spin quantum number q for basis index idx (descending order, idx 0 is q = n/2).
inline double q_of_index(int n, int idx) {
    return 0.5 * n - idx;
}

} // namespace gusym
