#ifndef ZFCUBE_ERRORS_HPP
#define ZFCUBE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zfcube {

/// Precondition on an argument's mathematical domain does not hold
/// (vertex not in graph, dimension too small, walk that is not a cycle).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed construction input, e.g. a matching that is not a bijection.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Arc set is not a forest of vertex-disjoint dipaths.
class StructureError : public std::runtime_error {
  public:
    StructureError(const std::string & what, std::uint32_t vertex) :
        std::runtime_error(what),
        vertex_(vertex)
    {
    }

    auto vertex() const -> std::uint32_t { return vertex_; }

  private:
    std::uint32_t vertex_;
};

/// Document could not be read. `location()` is a byte offset for syntax
/// errors or a JSON pointer for semantic ones.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string & what, std::string location) :
        std::runtime_error(what + " (at " + location + ")"),
        location_(std::move(location))
    {
    }

    auto location() const -> const std::string & { return location_; }

  private:
    std::string location_;
};

}

#endif
