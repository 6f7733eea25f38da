#ifndef RATCURVE_ERRORS_HPP
#define RATCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratcurve {

/// Malformed or rejected user input (bad rationals, degree mismatch, common factor).
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division requested on a non-divisible pair.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

class NotSquare : public std::runtime_error {
public:
    explicit NotSquare(const std::string& what) : std::runtime_error(what) {}
};

/// A symbolic determinant evaluation disagreed with the declared total degree.
class DegreeMismatch : public std::runtime_error {
public:
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// The parametrization is generically e-to-1 with e > 1.
class ImproperParametrization : public std::runtime_error {
public:
    explicit ImproperParametrization(int e)
        : std::runtime_error("improper: e = " + std::to_string(e)), e_(e) {}
    int e() const { return e_; }

private:
    int e_;
};

/// A mathematically guaranteed identity failed at runtime: implementation bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ratcurve

#endif
