#pragma once

#include <stdexcept>
#include <string>

namespace relosc {

// Invalid model parameters or a call made in the wrong regime.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Position outside the coordinate domain (beyond the horizon or at a PT wall).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested bound state does not exist (RM level above n_max).
class NoSuchLevel : public ParameterError {
 public:
  NoSuchLevel(const std::string& what, long n_max)
      : ParameterError(what), n_max_(n_max) {}
  long n_max() const noexcept { return n_max_; }

 private:
  long n_max_;
};

// Iterative method failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_tolerance)
      : std::runtime_error(what), achieved_(achieved_tolerance) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace relosc
