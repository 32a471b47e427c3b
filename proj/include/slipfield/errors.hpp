#pragma once

#include <stdexcept>
#include <string>

namespace slipfield {

// Numerical-failure family: conditions detected while computing, as opposed
// to malformed inputs (std::invalid_argument / std::domain_error).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Kernel violates the admissibility bounds (positivity, symmetry, evenness).
class InadmissibleKernelError : public NumericalError {
public:
    explicit InadmissibleKernelError(const std::string& what) : NumericalError(what) {}
};

// Dislocation network violates Burgers-vector conservation at a junction.
class InvalidNetworkError : public NumericalError {
public:
    explicit InvalidNetworkError(const std::string& what) : NumericalError(what) {}
};

// Periodic network topology cannot realize its declared slip gradient.
class InfeasibleTopologyError : public NumericalError {
public:
    explicit InfeasibleTopologyError(const std::string& what) : NumericalError(what) {}
};

// Requested core scale cannot be resolved on the given grid.
class ResolutionError : public NumericalError {
public:
    explicit ResolutionError(const std::string& what) : NumericalError(what) {}
};

// Guard against direct real-space double sums beyond desk scale.
class DeskScaleError : public NumericalError {
public:
    explicit DeskScaleError(const std::string& what) : NumericalError(what) {}
};

// Supplied energy density fails a structural check (e.g. 1-homogeneity).
class InvalidDensityError : public NumericalError {
public:
    explicit InvalidDensityError(const std::string& what) : NumericalError(what) {}
};

} // namespace slipfield
