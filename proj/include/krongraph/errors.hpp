#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krongraph {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeEntryError : public Error {
 public:
  using Error::Error;
};

class SumNotOneError : public Error {
 public:
  SumNotOneError(const std::string& what, double actual) : Error(what), actual_sum_(actual) {}
  double actual_sum() const noexcept { return actual_sum_; }

 private:
  double actual_sum_;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class NoiseOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class DegenerateMatrixError : public Error {
 public:
  using Error::Error;
};

class ZeroTotalWeightError : public Error {
 public:
  using Error::Error;
};

class MismatchedLevelsError : public Error {
 public:
  using Error::Error;
};

class MalformedLineError : public Error {
 public:
  MalformedLineError(const std::string& what, std::size_t line_number)
      : Error(what), line_number_(line_number) {}
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailureError : public Error {
 public:
  ConvergenceFailureError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double achieved_residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace krongraph
