#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Parameter outside its documented domain (e.g. |a| >= 1, m > p).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Series inversion requested for a series with vanishing constant term.
class ZeroLeadingCoefficient : public DomainError {
public:
    explicit ZeroLeadingCoefficient(const std::string& what) : DomainError(what) {}
};

/// Radius equation has no sign change on (0,1); signals a parameter-domain bug.
class NoRootInUnitInterval : public std::runtime_error {
public:
    explicit NoRootInUnitInterval(const std::string& what) : std::runtime_error(what) {}
};

/// An equation documented as having a unique positive root produced several brackets.
class MultipleRoots : public std::runtime_error {
public:
    explicit MultipleRoots(const std::string& what) : std::runtime_error(what) {}
};

/// Sharpness scan produced no witness on the requested grids.
class NoWitnessFound : public std::runtime_error {
public:
    explicit NoWitnessFound(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bohr
