#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brann {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSizeError : public Error {
public:
    using Error::Error;
};

/// A table failed one of the ring/module/homomorphism axioms.
class AxiomError : public Error {
public:
    AxiomError(std::string axiom, std::vector<int> witness);

    const std::string& axiom() const noexcept { return axiom_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

/// Operands live over different rings/modules or have inconsistent dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A cochain entry that normalization pins to zero is nonzero.
class NormalizationError : public Error {
public:
    NormalizationError(std::string component, std::vector<int> witness);

    const std::string& component() const noexcept { return component_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::string component_;
    std::vector<int> witness_;
};

class PathError : public Error {
public:
    PathError(std::size_t step, const std::string& what);

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Morphisms with different objects cannot be composed.
class CompositionError : public Error {
public:
    using Error::Error;
};

class InstanceTooLargeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; names the offending path and field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Fixed-width integer arithmetic left its range.
class OverflowError : public Error {
public:
    using Error::Error;
};

std::string format_tuple(const std::vector<int>& values);

} // namespace brann
