#pragma once

#include <stdexcept>
#include <string>

namespace heunc {

/// Base class for every numerical failure this library reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Gamma/log-gamma evaluated at (or within tolerance of) a non-positive integer.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// A closed-form that requires a convergence condition (e.g. Re(r-p-q) > 0,
/// or the connection-coefficient domain Re(1-delta) > 0) was requested outside it.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

/// The three-term recurrence hit a vanishing leading coefficient a*P_k.
class RecurrenceBreakdown : public Error {
public:
    explicit RecurrenceBreakdown(const std::string& what) : Error(what) {}
};

/// Series evaluation requested outside the convergence disc (margin included).
class OutOfDisc : public Error {
public:
    explicit OutOfDisc(const std::string& what) : Error(what) {}
};

/// A prefactor power was evaluated exactly on its principal-branch cut and no
/// side was selected.
class BranchCut : public Error {
public:
    explicit BranchCut(const std::string& what) : Error(what) {}
};

/// Continuation path violates the distance-to-singularity invariant.
class PathTooCloseToSingularity : public Error {
public:
    explicit PathTooCloseToSingularity(const std::string& what) : Error(what) {}
};

/// Adaptive ODE stepper could not meet the local tolerance.
class StepFailure : public Error {
public:
    explicit StepFailure(const std::string& what) : Error(what) {}
};

/// Sequence extrapolation did not settle to the requested tolerance.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature could not meet the requested tolerance.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

/// Parameters violate an admissibility flag (integer gamma etc.).
class InadmissibleError : public Error {
public:
    explicit InadmissibleError(const std::string& what) : Error(what) {}
};

} // namespace heunc
