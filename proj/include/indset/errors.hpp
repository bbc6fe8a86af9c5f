#pragma once

#include <stdexcept>
#include <string>

namespace indset {

/// Precondition violated by the caller (bad vertex index, empty graph, k out of range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A fixed-width accumulator would have wrapped.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A construction produced an object that fails its own certificate.
/// Signals a bug in the library, never bad input.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed text or binary input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured memory budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cross-check between two independent computations disagreed.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace indset
