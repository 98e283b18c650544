#pragma once

#include <stdexcept>
#include <string>

namespace wva {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (non-finite, negative
/// area, angle out of range, empty grid, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Pre- and post-selection are (numerically) orthogonal: |<phi_f|phi_i>| is
/// below the overlap floor, so no light survives the final polarizer.
class NearOrthogonalError : public DomainError
{
public:
  explicit NearOrthogonalError(double overlap_abs)
    : DomainError("near-orthogonal selection: |m+n| = " + std::to_string(overlap_abs) +
                  " is below the overlap floor"),
      overlap_abs_(overlap_abs)
  {}

  double overlap_abs() const { return overlap_abs_; }

private:
  double overlap_abs_;
};

/// Input carries no usable signal (all-zero spectrum, too few nonzero points).
class DegenerateInputError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// The Gaussian fitter ran out of iterations.
class FitError : public Error
{
public:
  FitError(const std::string& what, double last_residual)
    : Error(what), last_residual_(last_residual)
  {}

  double last_residual() const { return last_residual_; }

private:
  double last_residual_;
};

} // namespace wva
