// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace brody {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.77245385090551602730;

// Exit-code classes used by the CLI: 2 = precondition violated,
// 3 = numerical non-convergence, 4 = a claimed bound failed.
class Error : public std::runtime_error {
 public:
  enum class Code { precondition = 2, nonconvergence = 3, bound = 4 };
  Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct LiftUndefined : Error {
  explicit LiftUndefined(const std::string& m) : Error(Code::precondition, m) {}
};
struct PoleAt : Error {
  PoleAt(Complex z, const std::string& m) : Error(Code::precondition, m), where(z) {}
  Complex where;
};
struct DegenerateCurve : Error {
  explicit DegenerateCurve(const std::string& m) : Error(Code::precondition, m) {}
};
struct QuadratureNonConvergent : Error {
  explicit QuadratureNonConvergent(const std::string& m) : Error(Code::nonconvergence, m) {}
};
struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& m) : Error(Code::precondition, m) {}
};
struct NotPeriodic : Error {
  explicit NotPeriodic(const std::string& m) : Error(Code::precondition, m) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& m) : Error(Code::precondition, m) {}
};
struct BoundViolated : Error {
  explicit BoundViolated(const std::string& m) : Error(Code::bound, m) {}
};
struct Infeasible : Error {
  explicit Infeasible(const std::string& m) : Error(Code::nonconvergence, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(Code::precondition, m) {}
};

}  // namespace brody
