#pragma once

#include <stdexcept>
#include <string>

namespace heckeq {

/// Evaluation of a rational function hit a genuine singularity: the reduced
/// denominator vanishes at the requested point.
class PoleError : public std::runtime_error {
  public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// An algebra element has no inverse over its scalar field.
class SingularError : public std::runtime_error {
  public:
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

/// Two scalars carry different live auxiliary variables.
class VariableMismatch : public std::invalid_argument {
  public:
    explicit VariableMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace heckeq
