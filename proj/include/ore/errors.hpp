#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Order or search-space limit exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Oracle candidate budget exhausted before the search finished.
class BudgetError : public CapacityError {
public:
    using CapacityError::CapacityError;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class LoopError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }

    auto offset() const noexcept -> std::size_t { return offset_; }

private:
    std::size_t offset_;
};

} // namespace ore
