#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace macrogame {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class NoSteadyState : public Error {
 public:
  explicit NoSteadyState(const std::string& what) : Error(what) {}
};

class DecompositionFailure : public Error {
 public:
  explicit DecompositionFailure(const std::string& what) : Error(what) {}
};

class NotDeterminate : public Error {
 public:
  explicit NotDeterminate(const std::string& what) : Error(what) {}
};

class HorizonTooShort : public Error {
 public:
  explicit HorizonTooShort(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class BestResponseNonConvergence : public Error {
 public:
  explicit BestResponseNonConvergence(const std::string& what) : Error(what) {}
};

class SpaceTooLarge : public Error {
 public:
  explicit SpaceTooLarge(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace macrogame
