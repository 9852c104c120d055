#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympbf {

/// Input document or coefficient string failed to parse.
struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Variable counts of two objects disagree.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A symmetric-only operation received a non-symmetric function.
/// Carries two equal-size variable subsets whose coefficients differ.
struct NotSymmetricError : std::invalid_argument {
  NotSymmetricError(std::string message, std::uint64_t witness_a, std::uint64_t witness_b)
      : std::invalid_argument(std::move(message)), subset_a(witness_a), subset_b(witness_b) {}

  std::uint64_t subset_a;
  std::uint64_t subset_b;
};

/// A 2^n enumeration was requested above the configured limit.
struct EnumerationLimitError : std::length_error {
  using std::length_error::length_error;
};

/// The iterative root finder did not meet its convergence or residual
/// contract. Carries the best iterates and their residuals for diagnosis.
struct RootFindingError : std::runtime_error {
  RootFindingError(std::string message, std::vector<std::complex<double>> iterates,
                   std::vector<double> residuals)
      : std::runtime_error(std::move(message)),
        best_iterates(std::move(iterates)),
        best_residuals(std::move(residuals)) {}

  std::vector<std::complex<double>> best_iterates;
  std::vector<double> best_residuals;
};

}  // namespace sympbf
