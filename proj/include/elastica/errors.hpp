#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elastica {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that makes a geometric construction meaningless (zero direction, non-finite value).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a formula, e.g. a jet with zero velocity.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A jet or phase point that is required to be in the arclength gauge but is not.
class GaugeError : public Error {
 public:
  using Error::Error;
};

/// Curvature too small for the Frenet frame to exist.
class FrameUndefined : public Error {
 public:
  using Error::Error;
};

/// Torsion c / kappa^2 with kappa at or below the frame threshold and c != 0.
class SingularTorsion : public Error {
 public:
  using Error::Error;
};

/// Finite-difference stencil does not fit inside the trace.
class StencilError : public Error {
 public:
  using Error::Error;
};

/// Input belongs to a different special-case branch of the reconstruction.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Phase point is not in the range of the Legendre transformation.
class NotInRange : public Error {
 public:
  using Error::Error;
};

/// Phase point has drifted off the constraint manifold.
class OffManifold : public Error {
 public:
  using Error::Error;
};

/// Too few samples, mismatched grids and similar container-shape problems.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or trace file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Failure inside an integrator step; carries the index of the failing step.
class IntegrationError : public Error {
 public:
  IntegrationError(std::size_t step_index, const std::string& what)
      : Error("integration failed at step " + std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}

  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

}  // namespace elastica
