#pragma once

#include <stdexcept>
#include <string>

namespace qhermite {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exactly-zero field element or polynomial.
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& ctx) : Error("division by zero: " + ctx) {}
};

/// Evaluation of a rational function at a point where the denominator vanishes.
/// Carries the offending point.
class VanishingDenominatorError : public Error {
public:
    explicit VanishingDenominatorError(const std::string& point)
        : Error("denominator vanishes at q = " + point), point_(point) {}
    const std::string& point() const noexcept { return point_; }

private:
    std::string point_;
};

/// Enumeration request above the hard cap.
class CapExceededError : public Error {
public:
    CapExceededError(int n, int cap)
        : Error("matching enumeration capped at n = " + std::to_string(cap) +
                ", requested n = " + std::to_string(n)) {}
};

/// A series whose Stieltjes-fraction coefficients do not exist
/// (a required leading quantity vanishes identically while the tail does not).
class DegenerateSeriesError : public Error {
public:
    explicit DegenerateSeriesError(int index)
        : Error("degenerate series: coefficient c_" + std::to_string(index) +
                " vanishes but the tail does not") {}
};

/// Exact division that turned out not to be exact; indicates a broken invariant.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& ctx) : Error("exact division failed: " + ctx) {}
};

}  // namespace qhermite
