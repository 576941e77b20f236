#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace rppi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration file, key, or value (maps to CLI exit code 1).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Numerical breakdown: singular matrix, failed factorization, etc.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace rppi
