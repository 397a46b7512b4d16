#pragma once

#include <stdexcept>
#include <string>

namespace nnpoly {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial, operator or poset text.
class parse_error : public error {
public:
    using error::error;
};

/// An operation was called outside its domain (unit input, non-atom, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A configured size cap was exceeded (Kronecker degree, integer size, |Z(f)|, poset size).
class resource_error : public error {
public:
    using error::error;
};

} // namespace nnpoly
