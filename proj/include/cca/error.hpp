#ifndef CCA_ERROR_HPP
#define CCA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cca
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (cycle notation, group expressions, parameter files).
class ParseError : public Error
{
public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// A configured size or work limit would be exceeded.
class LimitExceeded : public Error
{
public:
  using Error::Error;
};

/// Resource limits shared by all enumeration-based operations.
struct Limits
{
  std::size_t enumeration = 1'000'000; ///< max elements materialized from a group
  std::size_t graph = 4096;            ///< max vertices of a Cayley graph
  unsigned max_field = 32;             ///< largest supported field order for PSL2
};

} // namespace cca

#endif // CCA_ERROR_HPP
