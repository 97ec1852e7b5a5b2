#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Precondition violations: wrong simplex dimension, non-edge input,
// non-manifold host where one is required, odd-degree vertex, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A size or step budget was exhausted before an exact answer was reached.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Expression / file format errors, with position where available.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t pos = std::string::npos)
        : std::runtime_error(what), position(pos) {}
    std::size_t position;
};

} // namespace chroma
