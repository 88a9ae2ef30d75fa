#pragma once

#include <stdexcept>
#include <string>

namespace krc {

/// Invalid input or a violated mathematical precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured vertex budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace krc
