#pragma once

#include <stdexcept>
#include <string>

namespace sl2t {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The caller handed us something outside a documented contract (bad
// periods, a seed that fails its conditions, an arc out of range, ...).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed serialized input (JSON that does not parse or lacks fields).
class ParseError : public DomainError {
  public:
    explicit ParseError(const std::string& what) : DomainError(what) {}
};

// An invariant the library maintains was observed broken. Reaching this is
// a bug, never a user error.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace sl2t
