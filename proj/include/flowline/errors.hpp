#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowline {

// Precondition and domain violations. The CLI maps these to exit code 2.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A theorem or corollary evaluated outside its stated hypotheses.
struct HypothesisError : DomainError {
  using DomainError::DomainError;
};

// A step request whose CFL number exceeds the admissible limit.
class CflError : public DomainError {
 public:
  static constexpr std::size_t kNoStep = static_cast<std::size_t>(-1);

  CflError(double cfl, std::size_t attempted_step = kNoStep,
           const std::string& where = {})
      : DomainError(compose(cfl, attempted_step, where)),
        cfl_number(cfl),
        step(attempted_step) {}

  double cfl_number;
  std::size_t step;

 private:
  static std::string compose(double cfl, std::size_t step,
                             const std::string& where) {
    std::string msg = "CFL number " + std::to_string(cfl) + " exceeds 1";
    if (step != kNoStep) msg += " at step " + std::to_string(step);
    if (!where.empty()) msg += " (" + where + ")";
    return msg;
  }
};

// Non-finite values appeared in the solution. CLI exit code 3.
class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(std::size_t first_bad_step, const std::string& where = {})
      : std::runtime_error("numerical blow-up: non-finite values first seen at step " +
                           std::to_string(first_bad_step) +
                           (where.empty() ? "" : " (" + where + ")")),
        step(first_bad_step) {}

  std::size_t step;
};

// A velocity sampler returned a non-finite vector while tracing.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t trajectory_index, std::size_t segment_index)
      : std::runtime_error("non-finite velocity sample on trajectory " +
                           std::to_string(trajectory_index) + ", segment " +
                           std::to_string(segment_index)),
        trajectory(trajectory_index),
        segment(segment_index) {}

  std::size_t trajectory;
  std::size_t segment;
};

}  // namespace flowline
