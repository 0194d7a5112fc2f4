#pragma once

#include <stdexcept>
#include <string>

namespace hyplat {

// Parameter (p,q) is not hyperbolic: 1/p + 1/q >= 1/2.
class EuclideanOrSphericalError : public std::invalid_argument {
public:
    explicit EuclideanOrSphericalError(const std::string& msg)
        : std::invalid_argument(msg) {}
};

class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A generation or enumeration budget was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// The requested operation cannot be answered correctly on this truncation.
class TruncationTooShallowError : public std::runtime_error {
public:
    explicit TruncationTooShallowError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A vertex set touches the outermost (incomplete) layer.
class FrontierContaminationError : public std::runtime_error {
public:
    explicit FrontierContaminationError(const std::string& msg)
        : std::runtime_error(msg) {}
};

class MissingValueError : public std::runtime_error {
public:
    explicit MissingValueError(const std::string& msg)
        : std::runtime_error(msg) {}
};

class OutOfRegionError : public std::runtime_error {
public:
    explicit OutOfRegionError(const std::string& msg)
        : std::runtime_error(msg) {}
};

class NeighboringTreesError : public std::invalid_argument {
public:
    explicit NeighboringTreesError(const std::string& msg)
        : std::invalid_argument(msg) {}
};

class BranchOutOfRangeError : public std::invalid_argument {
public:
    explicit BranchOutOfRangeError(const std::string& msg)
        : std::invalid_argument(msg) {}
};

class DegenerateParameterError : public std::invalid_argument {
public:
    explicit DegenerateParameterError(const std::string& msg)
        : std::invalid_argument(msg) {}
};

// The interface prefix does not split the window into two components.
class NotSeparatingError : public std::runtime_error {
public:
    explicit NotSeparatingError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Violated internal invariant; always a bug, never a valid state.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hyplat
